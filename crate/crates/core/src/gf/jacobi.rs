//! Eta, theta, μ and the level-ℓ Appell functions at monomial arguments.
//!
//! Arguments are restricted to `x = εz + aτ + b/2` with integers `ε, a, b`,
//! so that `e^{2πix} = (-1)^b ζ^ε q^a`. The modular variable is `sτ` for a
//! positive integer scale `s`. Every value is returned as a
//! [`PrefixedSeries`]; `top` arguments are absolute body exponents.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::gf::bilateral::BilateralSpec;
use crate::laurent::QLaurent;
use crate::prefixed::PrefixedSeries;
use crate::product::{FactorProduct, Monomial};
use crate::ring::Ring;
use crate::series::Series;
use crate::zeta::ZetaLaurent;

/// `x = eps·z + a·τ + b/2`
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JacobiArg {
    pub eps: i64,
    pub a: i64,
    pub b: i64,
}

impl JacobiArg {
    pub fn new(eps: i64, a: i64, b: i64) -> Self {
        JacobiArg { eps, a, b }
    }

    /// `z`
    pub fn z() -> Self {
        Self::new(1, 0, 0)
    }

    /// Builds `eps·z + tau·τ + constant` from rational coefficients; only
    /// integral `tau` and half-integral `constant` give monomial exponentials.
    pub fn from_rational(eps: i64, tau: Ratio<i64>, constant: Ratio<i64>) -> Result<Self> {
        let twice = constant * 2;
        if !tau.is_integer() || !twice.is_integer() {
            return Err(Error::UnsupportedSpecialization(format!(
                "e^(2πi({eps}z + {tau}τ + {constant})) is not a monomial in ζ and q"
            )));
        }
        Ok(Self::new(eps, tau.to_integer(), twice.to_integer()))
    }

    /// `e^{2πix}` as a ζ-coefficient times `q^a`.
    pub fn exponential(&self) -> Monomial<ZetaLaurent> {
        let sign = if self.b.rem_euclid(2) == 0 { 1 } else { -1 };
        Monomial::new(ZetaLaurent::monomial(sign, self.eps), self.a)
    }

    fn conjugate_exponential(&self) -> Monomial<ZetaLaurent> {
        let e = self.exponential();
        Monomial::new(e.coeff.conjugate(), -self.a)
    }
}

fn check_scale(s: i64) -> Result<()> {
    if s < 1 {
        return Err(Error::Domain(format!("modular scale {s} must be positive")));
    }
    Ok(())
}

/// `η(kτ) = q^{k/24} (q^k; q^k)_∞`
pub fn eta(k: i64, top: i64) -> Result<PrefixedSeries> {
    check_scale(k)?;
    let body = FactorProduct::one().poch_inf(&Monomial::q(k), k).expand(top)?;
    Ok(PrefixedSeries::new(0, 0, k, body))
}

/// `ϑ(x; sτ)` from its defining sum over half-integers.
///
/// With `n = k + 1/2` the summand is
/// `i^{b+1} ζ^{ε/2} q^{a/2 + s/8} · (-1)^{(b+1)k} ζ^{εk} q^{s k(k+1)/2 + ak}`.
pub fn theta_sum(x: JacobiArg, s: i64, top: i64) -> Result<PrefixedSeries> {
    check_scale(s)?;
    let exp = |k: i64| s * k * (k + 1) / 2 + x.a * k;
    // exp is a convex quadratic; scan outwards from its minimum
    let centre = (-(2 * x.a + s) as f64 / (2 * s) as f64).round() as i64;
    let mut lo = centre;
    while exp(lo - 1) <= top || exp(lo - 1) < exp(lo) {
        lo -= 1;
    }
    let mut hi = centre;
    while exp(hi + 1) <= top || exp(hi + 1) < exp(hi) {
        hi += 1;
    }
    let valuation = (lo..=hi).map(exp).min().unwrap_or(0).min(top);
    let mut body = Series::zero((top - valuation) as usize);
    for k in lo..=hi {
        let e = exp(k);
        if e > top {
            continue;
        }
        let sign = if (x.b + 1) * k % 2 == 0 { 1 } else { -1 };
        body.add_at((e - valuation) as usize, &ZetaLaurent::monomial(sign, x.eps * k));
    }
    Ok(PrefixedSeries::new(x.b + 1, x.eps, 12 * x.a + 3 * s, QLaurent::new(valuation, body)))
}

/// `(q^s, e^{2πix}, e^{-2πix} q^s; q^s)_∞` without its prefactor.
fn theta_product_factors(x: JacobiArg, s: i64) -> FactorProduct<ZetaLaurent> {
    FactorProduct::one()
        .poch_inf(&Monomial::q(s), s)
        .poch_inf(&x.exponential(), s)
        .poch_inf(&x.conjugate_exponential().shift(s), s)
}

/// `ϑ(x; sτ) = -i q^{s/8} e^{-πix} (q^s, e^{2πix}, e^{-2πix}q^s; q^s)_∞`.
pub fn theta_product(x: JacobiArg, s: i64, top: i64) -> Result<PrefixedSeries> {
    check_scale(s)?;
    let body = theta_product_factors(x, s).expand(top)?;
    Ok(PrefixedSeries::new(3 - x.b, -x.eps, 3 * s - 12 * x.a, body))
}

/// Constant factors `1 - c` that the product form of `ϑ(x; sτ)` contains.
///
/// These are the factors with q-exponent zero after normalization; they are
/// non-units in ℤ[ζ, ζ⁻¹] whenever `ε ≠ 0`, and the scalar 2 when `ε = 0`
/// and `b` is odd.
pub fn theta_constant_factor(x: JacobiArg, s: i64) -> ZetaLaurent {
    let mut c = ZetaLaurent::one();
    let e = x.exponential();
    if x.a.rem_euclid(s) == 0 {
        // e^{2πix} q^{sj} has exponent zero for j = -a/s when a <= 0
        if x.a <= 0 {
            c = c.times(&ZetaLaurent::one().minus(&e.coeff));
        }
        // e^{-2πix} q^{s(j+1)} has exponent zero when a >= s
        if x.a >= s {
            c = c.times(&ZetaLaurent::one().minus(&e.coeff.conjugate()));
        }
    }
    c
}

/// `ϑ(x; sτ) / c` where `c` is [`theta_constant_factor`]; the leading body
/// coefficient is then a unit, so the result is invertible.
pub fn theta_reduced(x: JacobiArg, s: i64, top: i64) -> Result<PrefixedSeries> {
    let c = theta_constant_factor(x, s);
    if c.is_zero() {
        return Err(Error::ThetaZero);
    }
    let full = theta_product(x, s, top)?;
    let body = full.body.body.map(|v| v.try_quotient(&c).expect("constant factor divides every coefficient"));
    Ok(PrefixedSeries { body: QLaurent::new(full.body.valuation, body), ..full })
}

/// Kernel of `Σ_n (-1)^{ℓn} e^{2πinx₂} q^{sℓn(n+1)/2} / (1 - e^{2πix₁} q^{sn})`.
pub fn appell_kernel(level: i64, x1: JacobiArg, x2: JacobiArg, s: i64) -> BilateralSpec {
    BilateralSpec {
        alternating: (level + x2.b).rem_euclid(2) == 1,
        quad2: s * level,
        lin2: s * level + 2 * x2.a,
        zeta_step: x2.eps,
        pole_sign: if x1.b.rem_euclid(2) == 0 { 1 } else { -1 },
        pole_zeta: x1.eps,
        pole_step: s,
        pole_shift: x1.a,
    }
}

fn kernel_sum(spec: &BilateralSpec, top: i64, cleared: bool) -> Result<QLaurent<ZetaLaurent>> {
    if cleared {
        spec.expand_cleared_laurent(top)
    } else {
        spec.expand_laurent(top)
    }
}

/// `A_ℓ(x₁, x₂; sτ)`.
pub fn appell(level: i64, x1: JacobiArg, x2: JacobiArg, s: i64, top: i64) -> Result<PrefixedSeries> {
    check_scale(s)?;
    let spec = appell_kernel(level, x1, x2, s);
    let body = kernel_sum(&spec, top, false)?;
    Ok(PrefixedSeries::new(level * x1.b, level * x1.eps, 12 * level * x1.a, body))
}

/// `(1 - e^{2πix₁}|_{q=1}) · A_ℓ(x₁, x₂; sτ)`, defined even when a pole
/// factor is constant.
pub fn appell_cleared(level: i64, x1: JacobiArg, x2: JacobiArg, s: i64, top: i64) -> Result<PrefixedSeries> {
    check_scale(s)?;
    let spec = appell_kernel(level, x1, x2, s);
    let body = kernel_sum(&spec, top, true)?;
    Ok(PrefixedSeries::new(level * x1.b, level * x1.eps, 12 * level * x1.a, body))
}

/// `c · μ(x₁, x₂; sτ)` where `c` is [`theta_constant_factor`] of `x₂`.
///
/// Dividing by the reduced theta function keeps the result integral in cases
/// such as `x₂ = 1/2`, where `c = 2` and μ itself has half-integer
/// coefficients.
pub fn mu_scaled(x1: JacobiArg, x2: JacobiArg, s: i64, top: i64) -> Result<(ZetaLaurent, PrefixedSeries)> {
    check_scale(s)?;
    let c = theta_constant_factor(x2, s);
    let theta = theta_reduced(x2, s, top)?;
    let spec = appell_kernel(1, x1, x2, s);
    let sum = kernel_sum(&spec, top, false)?;
    let numerator = PrefixedSeries::new(x1.b, x1.eps, 12 * x1.a, sum);
    Ok((c, numerator.div(&theta)?))
}

/// `μ(x₁, x₂; sτ)`; fails with [`Error::InexactDivision`] if the theta
/// denominator leaves non-integral coefficients.
pub fn mu(x1: JacobiArg, x2: JacobiArg, s: i64, top: i64) -> Result<PrefixedSeries> {
    let (c, v) = mu_scaled(x1, x2, s, top)?;
    let coeffs = v
        .body
        .body
        .coeffs()
        .iter()
        .map(|x| x.try_quotient(&c))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::InexactDivision(format!("μ has coefficients outside ℤ[ζ, ζ⁻¹] (theta constant {c})")))?;
    let body = Series::from_coeffs(coeffs, v.body.body.order());
    Ok(PrefixedSeries { body: QLaurent::new(v.body.valuation, body), ..v })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args() -> Vec<(JacobiArg, i64)> {
        vec![
            (JacobiArg::new(1, 0, 0), 1),
            (JacobiArg::new(1, 0, 1), 1),
            (JacobiArg::new(1, 0, 1), 2),
            (JacobiArg::new(1, 1, 1), 2),
            (JacobiArg::new(-1, 2, 0), 3),
            (JacobiArg::new(0, 0, 1), 2),
            (JacobiArg::new(1, -1, 0), 1),
        ]
    }

    #[test]
    fn triple_product() {
        for (x, s) in args() {
            let a = theta_sum(x, s, 40).unwrap();
            let b = theta_product(x, s, 40).unwrap();
            assert!(a.equals(&b).unwrap(), "{x:?} s={s}");
        }
    }

    #[test]
    fn theta_shifted_by_half() {
        // ϑ(z + 1/2; τ) = -q^{1/8} ζ^{-1/2} (q, -ζ, -ζ⁻¹q; q)_∞
        let t = theta_product(JacobiArg::new(1, 0, 1), 1, 4).unwrap().normalized();
        assert_eq!((t.unit, t.zeta_half, t.q24), (0, 1, 3));
        assert_eq!(t.body.coefficient(0).unwrap(), ZetaLaurent::from_terms([(-1, -1), (0, -1)]));
        let s = theta_sum(JacobiArg::new(1, 0, 1), 1, 4).unwrap();
        assert!(s.equals(&t).unwrap());
    }

    #[test]
    fn eta_power_cancels() {
        let e = eta(1, 30).unwrap().pow(24);
        assert_eq!(e.normalized().q24, 0);
        let one = e.mul(&e.inverse().unwrap()).into_integral(20).unwrap();
        assert_eq!(one, Series::one(20));
    }

    #[test]
    fn non_monomial_arguments_are_rejected() {
        assert!(matches!(
            JacobiArg::from_rational(1, Ratio::new(1, 2), Ratio::from_integer(0)),
            Err(Error::UnsupportedSpecialization(_))
        ));
        assert!(matches!(
            JacobiArg::from_rational(1, Ratio::from_integer(0), Ratio::new(1, 3)),
            Err(Error::UnsupportedSpecialization(_))
        ));
        assert_eq!(
            JacobiArg::from_rational(1, Ratio::from_integer(1), Ratio::new(1, 2)).unwrap(),
            JacobiArg::new(1, 1, 1)
        );
    }

    #[test]
    fn reduced_theta_has_unit_leading_term() {
        for (x, s) in args() {
            let r = theta_reduced(x, s, 20).unwrap();
            let lead = r.body.body.coeffs()[r.body.body.valuation().unwrap()].clone();
            assert!(lead.as_monomial().is_some_and(|(_, c)| num_traits::One::is_one(c.magnitude())), "{x:?}");
        }
    }

    #[test]
    fn mu_matches_direct_summation() {
        // c μ(z + 1/2 + τ, 1/2; 2τ) · ϑ_reduced(1/2; 2τ) recovers the prefactored kernel
        let x1 = JacobiArg::new(1, 1, 1);
        let x2 = JacobiArg::new(0, 0, 1);
        let (c, m) = mu_scaled(x1, x2, 2, 30).unwrap();
        assert_eq!(c, ZetaLaurent::constant(2));
        let back = m.mul(&theta_reduced(x2, 2, 30).unwrap());
        let kernel = appell_kernel(1, x1, x2, 2).expand(20).unwrap();
        let direct = PrefixedSeries::new(1, 1, 12, QLaurent::from_series(kernel));
        assert!(back.equals(&direct).unwrap());
    }

    #[test]
    fn singular_mu_is_reported() {
        // ϑ(0; τ) vanishes identically
        let r = mu(JacobiArg::new(1, 1, 1), JacobiArg::new(0, 0, 0), 2, 10);
        assert_eq!(r.unwrap_err(), Error::ThetaZero);
    }
}
