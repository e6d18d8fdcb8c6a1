//! Growth of the exact counts against their main terms, monotonicity, and a
//! few floating-point probes of the limits used in the asymptotic arguments.

use std::f64::consts::{LN_2, PI};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gf::rank::{self, ZetaPair};
use crate::series::Series;

/// Largest `n` for which exact counts are computed.
pub const MAX_COUNT_ORDER: usize = 5000;

/// A counting function with a known main term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GrowthTarget {
    /// partitions
    P,
    /// strongly unimodal sequences
    U,
    /// `ū2(n)`
    U2bar,
    /// `u2(n)`
    U2,
}

impl GrowthTarget {
    pub const ALL: [GrowthTarget; 4] = [GrowthTarget::P, GrowthTarget::U, GrowthTarget::U2bar, GrowthTarget::U2];

    pub fn name(&self) -> &'static str {
        match self {
            GrowthTarget::P => "p",
            GrowthTarget::U => "u",
            GrowthTarget::U2bar => "u2bar",
            GrowthTarget::U2 => "u2",
        }
    }

    /// The exponent `c√n` of the main term.
    pub fn exponent(&self, n: f64) -> f64 {
        match self {
            GrowthTarget::U2bar => PI * (n / 2.0).sqrt(),
            _ => PI * (2.0 * n / 3.0).sqrt(),
        }
    }

    /// Natural log of the main term at `n`.
    pub fn log_main_term(&self, n: f64) -> f64 {
        let denom = match self {
            GrowthTarget::P => 4.0 * 3f64.sqrt() * n,
            GrowthTarget::U => 8.0 * 6f64.powf(0.25) * n.powf(0.75),
            GrowthTarget::U2bar => 8.0 * (2.0 * n).powf(0.75),
            GrowthTarget::U2 => 4.0 * 3f64.sqrt() * (6.0 * n).powf(0.75),
        };
        self.exponent(n) - denom.ln()
    }

    /// The main term itself; overflows to infinity for large `n`.
    pub fn main_term(&self, n: f64) -> f64 {
        self.log_main_term(n).exp()
    }
}

impl fmt::Display for GrowthTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GrowthTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GrowthTarget::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownSeries(s.to_string()))
    }
}

/// Natural log of a positive big integer.
pub fn ln_bigint(x: &BigInt) -> f64 {
    assert_eq!(x.sign(), Sign::Plus, "ln of a non-positive integer");
    let bits = x.bits();
    let shift = bits.saturating_sub(60);
    let top: BigInt = x >> shift;
    let mantissa = u64::try_from(&top).expect("fits in 64 bits") as f64;
    mantissa.ln() + shift as f64 * LN_2
}

/// The generating function of `target` at ζ = 1, through `q^order`.
pub fn generating_function(target: GrowthTarget, order: usize) -> Result<Series<BigInt>> {
    if order > MAX_COUNT_ORDER {
        return Err(Error::SizeLimit { n: order, limit: MAX_COUNT_ORDER });
    }
    let one = ZetaPair::unit();
    Ok(match target {
        GrowthTarget::P => rank::partitions(order),
        GrowthTarget::U => rank::strongly_unimodal(&one, order)?,
        GrowthTarget::U2bar => rank::m2_left_heavy_overlined(&one, order)?.negate_q(),
        GrowthTarget::U2 => rank::m2_left_heavy(&one, order)?.negate_q(),
    })
}

/// Exact counts for `0 ≤ n ≤ order`.
pub fn exact_counts(target: GrowthTarget, order: usize) -> Result<Vec<BigInt>> {
    Ok(generating_function(target, order)?.into_coeffs())
}

#[derive(Clone, Debug, PartialEq)]
pub struct RatioRow {
    pub n: usize,
    pub count: BigInt,
    /// `count / main term`
    pub ratio: f64,
    /// `ln count / exponent`
    pub log_ratio: f64,
}

impl RatioRow {
    pub fn deviation(&self) -> f64 {
        (self.ratio - 1.0).abs()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RatioReport {
    pub target: GrowthTarget,
    pub rows: Vec<RatioRow>,
}

impl RatioReport {
    /// True if `|r(n) - 1|` strictly decreases along the checkpoints.
    pub fn deviation_decreasing(&self) -> bool {
        self.rows.windows(2).all(|w| w[1].deviation() < w[0].deviation())
    }

    pub fn last(&self) -> Option<&RatioRow> {
        self.rows.last()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "target": self.target.name(),
            "rows": self.rows.iter().map(|r| json!({
                "n": r.n,
                "count": r.count.to_string(),
                "ratio": r.ratio,
                "deviation": r.deviation(),
                "log_ratio": r.log_ratio,
            })).collect::<Vec<_>>(),
            "deviation_decreasing": self.deviation_decreasing(),
        })
    }
}

/// Compares exact counts with the main term at each checkpoint.
pub fn ratio_report(target: GrowthTarget, checkpoints: &[usize]) -> Result<RatioReport> {
    let top = checkpoints.iter().copied().max().unwrap_or(0);
    let counts = exact_counts(target, top)?;
    ratio_report_from(target, &counts, checkpoints)
}

/// [`ratio_report`] over precomputed counts.
pub fn ratio_report_from(target: GrowthTarget, counts: &[BigInt], checkpoints: &[usize]) -> Result<RatioReport> {
    let rows = checkpoints
        .iter()
        .map(|&n| {
            let count = counts.get(n).ok_or(Error::OutOfRange { index: n as i64, order: counts.len() as i64 - 1 })?;
            if n == 0 || count.is_zero() {
                return Err(Error::Domain(format!("no positive count at n = {n}")));
            }
            let x = n as f64;
            let ln = ln_bigint(count);
            Ok(RatioRow {
                n,
                count: count.clone(),
                ratio: (ln - target.log_main_term(x)).exp(),
                log_ratio: ln / target.exponent(x),
            })
        })
        .collect::<Result<_>>()?;
    Ok(RatioReport { target, rows })
}

/// First `n < counts.len() - 1` with `counts[n + 1] < counts[n]`.
pub fn first_decrease(counts: &[BigInt]) -> Option<usize> {
    counts.windows(2).position(|w| w[1] < w[0])
}

/// First `n < order` with `count(n + 1) < count(n)`.
pub fn monotonicity_check(target: GrowthTarget, order: usize) -> Result<Option<usize>> {
    Ok(first_decrease(&exact_counts(target, order)?))
}

/// `(1 - q) Ū2(1;-q)` through `q^order`.
pub fn u2bar_first_difference(order: usize) -> Result<Series<BigInt>> {
    let mut s = generating_function(GrowthTarget::U2bar, order)?;
    s.mul_one_minus(&BigInt::from(1), 1);
    Ok(s)
}

/// `F_n(q) = (-q²;q²)_{n-1} q^{2n} / ((1 + q^{2n}) (q³;q²)_{n-1})`; these sum
/// to `(1 - q) Ū2(1;-q)`.
pub fn f_term(n: usize, order: usize) -> Series<BigInt> {
    let one = BigInt::from(1);
    let minus_one = BigInt::from(-1);
    let mut s = Series::monomial(one.clone(), 2 * n, order);
    for k in 1..n {
        s.mul_one_minus(&minus_one, 2 * k);
        s.div_one_minus(&one, 2 * k + 1);
    }
    s.div_one_minus(&minus_one, 2 * n);
    s
}

/// `F_1 + F_2 + F_3 + F_4` through `q^order`.
pub fn f_group(order: usize) -> Series<BigInt> {
    (1..=4).map(|n| f_term(n, order)).fold(Series::zero(order), |acc, f| acc.add_truncating(&f))
}

/// `Σ_{n ≥ 1} F_n` through `q^order`.
pub fn f_sum(order: usize) -> Series<BigInt> {
    (1..=order / 2).map(|n| f_term(n, order)).fold(Series::zero(order), |acc, f| acc.add_truncating(&f))
}

/// One row of the eta probe.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EtaProbe {
    pub w: f64,
    /// `(e^{-w}; e^{-w})_∞`
    pub product: f64,
    /// `√(2π/w) e^{-π²/(6w)}`
    pub approximation: f64,
    pub ratio: f64,
    /// Bound on the neglected tail of `Σ log(1 - q^k)`.
    pub tail_bound: f64,
}

/// `log (q;q)_∞` with `q = e^{-w}`, summed until the tail bound drops below
/// `1e-17`; returns the sum and the bound.
fn log_euler_product(w: f64) -> (f64, f64) {
    let q = (-w).exp();
    let mut sum = 0.0;
    let mut k = 1.0;
    loop {
        let qk = (-w * k).exp();
        sum += (-qk).ln_1p();
        // |log(1 - x)| ≤ x/(1 - x), summed geometrically over k' > k
        let tail = qk * q / ((1.0 - q) * (1.0 - qk * q));
        if tail < 1e-17 {
            return (sum, tail);
        }
        k += 1.0;
    }
}

/// Compares `(e^{-w}; e^{-w})_∞` with `√(2π/w) e^{-π²/(6w)}` at each `w`.
pub fn eta_asymptotic_probe(ws: &[f64]) -> Result<Vec<EtaProbe>> {
    ws.iter()
        .map(|&w| {
            if !(w > 0.0 && w.is_finite()) {
                return Err(Error::Domain(format!("w = {w} must be positive")));
            }
            let (log_prod, tail_bound) = log_euler_product(w);
            let log_approx = 0.5 * (2.0 * PI / w).ln() - PI * PI / (6.0 * w);
            Ok(EtaProbe {
                w,
                product: log_prod.exp(),
                approximation: log_approx.exp(),
                ratio: (log_prod - log_approx).exp(),
                tail_bound,
            })
        })
        .collect()
}

/// The two sums in the representation of `Ū2(1;-q)` used for its asymptotics,
/// evaluated at `q = e^{-w}`:
/// `Σ (q²;q²)_n (-1)^n q^n / (-q;q²)_{n+1}` and
/// `Σ (q²;q⁴)_n (-1)^n q^{2n} / (-q;q²)_{n+1}²`.
pub fn limit_sums(w: f64) -> Result<(f64, f64)> {
    if !(w > 0.0 && w.is_finite()) {
        return Err(Error::Domain(format!("w = {w} must be positive")));
    }
    let q = (-w).exp();
    let (mut s1, mut s2) = (0.0, 0.0);
    // t1 = (q²;q²)_n (-q)^n / (-q;q²)_{n+1}, t2 likewise
    let mut t1 = 1.0 / (1.0 + q);
    let mut t2 = 1.0 / ((1.0 + q) * (1.0 + q));
    for n in 0..1_000_000 {
        s1 += t1;
        s2 += t2;
        if t1.abs() < 1e-16 && t2.abs() < 1e-16 {
            return Ok((s1, s2));
        }
        let k = n as f64;
        let next_den = 1.0 + q.powf(2.0 * k + 3.0);
        t1 *= -(1.0 - q.powf(2.0 * k + 2.0)) * q / next_den;
        t2 *= -(1.0 - q.powf(4.0 * k + 2.0)) * q * q / (next_den * next_den);
    }
    Err(Error::Guard(format!("limit sums did not converge at w = {w}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn count_prefixes() {
        assert_eq!(small(&exact_counts(GrowthTarget::P, 4).unwrap()), vec![1, 1, 2, 3, 5]);
        assert_eq!(exact_counts(GrowthTarget::U2bar, 10).unwrap()[7], BigInt::from(5));
        assert_eq!(exact_counts(GrowthTarget::U2, 10).unwrap()[6], BigInt::from(5));
        assert!(matches!(exact_counts(GrowthTarget::P, 5001), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn ln_bigint_matches_f64() {
        let x = BigInt::from(10).pow(40) * 7;
        assert!((ln_bigint(&x) - (7e40f64).ln()).abs() < 1e-12);
        assert!((ln_bigint(&BigInt::from(12345)) - 12345f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn partition_calibration() {
        let r = ratio_report(GrowthTarget::P, &[1000]).unwrap();
        assert!((0.5..1.5).contains(&r.rows[0].ratio));
    }

    #[test]
    fn targets_parse() {
        for t in GrowthTarget::ALL {
            assert_eq!(t.name().parse::<GrowthTarget>().unwrap(), t);
        }
        assert!("q".parse::<GrowthTarget>().is_err());
    }

    #[test]
    fn f_terms_sum_to_the_first_difference() {
        assert_eq!(f_sum(300), u2bar_first_difference(300).unwrap());
    }

    #[test]
    fn f_terms_beyond_the_second_are_nonnegative() {
        for n in 3..12 {
            assert!(f_term(n, 300).is_nonnegative(), "F_{n}");
        }
        assert!(f_term(1, 300).first_negative().is_some());
        assert!(f_term(2, 300).first_negative().is_some());
        assert!(f_group(300).is_nonnegative());
    }

    #[test]
    fn eta_probe_converges() {
        let rows = eta_asymptotic_probe(&[0.5, 0.25, 0.125]).unwrap();
        assert!(rows.windows(2).all(|w| (w[1].ratio - 1.0).abs() < (w[0].ratio - 1.0).abs()));
        let far = eta_asymptotic_probe(&[20.0]).unwrap();
        assert!((far[0].ratio - 1.0).abs() > 0.5);
        assert!(eta_asymptotic_probe(&[0.0]).is_err());
    }

    #[test]
    fn limit_sums_near_one() {
        let (a, b) = limit_sums(0.05).unwrap();
        assert!((a - 0.5).abs() < 0.05, "{a}");
        assert!((b - 0.25).abs() < 0.05, "{b}");
    }
}
