//! Bilateral generalized Lambert series
//!
//! ```text
//!   Σ_{n∈ℤ} σ^n ζ^{k n} q^{(A n² + B n)/2} / (1 - ρ ζ^e q^{c n + d})
//! ```
//!
//! Terms with `c n + d < 0` are rewritten through
//! `1/(1 - x) = -x⁻¹/(1 - x⁻¹)`, so every term expands in non-negative powers
//! of q. Summand `n` then starts at `q^{E(n) + max(0, -(c n + d))}` with
//! `E(n) = (A n² + B n)/2`; the summation range is cut where that bound
//! exceeds the truncation order for good.

use crate::error::{Error, Result};
use crate::laurent::QLaurent;
use crate::product::{FactorProduct, Monomial};
use crate::ring::Ring;
use crate::series::ZSeries;
use crate::zeta::ZetaLaurent;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilateralSpec {
    /// Include `(-1)^n`.
    pub alternating: bool,
    /// `A` in the exponent `(A n² + B n)/2`.
    pub quad2: i64,
    /// `B` in the exponent `(A n² + B n)/2`.
    pub lin2: i64,
    /// `k` in `ζ^{k n}`.
    pub zeta_step: i64,
    /// `ρ = ±1` in the pole `1 - ρ ζ^e q^{c n + d}`.
    pub pole_sign: i64,
    pub pole_zeta: i64,
    pub pole_step: i64,
    pub pole_shift: i64,
}

impl BilateralSpec {
    /// `Σ (-1)^n q^{2n²+3n} / (1 + ζ q^{2n+1})`
    pub fn example() -> Self {
        BilateralSpec {
            alternating: true,
            quad2: 4,
            lin2: 6,
            zeta_step: 0,
            pole_sign: -1,
            pole_zeta: 1,
            pole_step: 2,
            pole_shift: 1,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.pole_step <= 0 {
            return Err(Error::DivergentSpec(format!("pole step {} must be positive", self.pole_step)));
        }
        if self.pole_sign.abs() != 1 {
            return Err(Error::UnsupportedSpecialization(format!("pole sign {}", self.pole_sign)));
        }
        if (self.quad2 + self.lin2).rem_euclid(2) != 0 {
            return Err(Error::DivergentSpec("exponent (A n² + B n)/2 is not integral".into()));
        }
        if self.quad2 < 0 || (self.quad2 == 0 && !(self.lin2 > 0 && self.lin2 < 2 * self.pole_step)) {
            return Err(Error::DivergentSpec("term orders do not grow in both directions".into()));
        }
        Ok(())
    }

    pub fn exponent(&self, n: i64) -> i64 {
        (self.quad2 * n * n + self.lin2 * n) / 2
    }

    pub fn pole_exponent(&self, n: i64) -> i64 {
        self.pole_step * n + self.pole_shift
    }

    /// Lowest power of q in summand `n`.
    pub fn term_bound(&self, n: i64) -> i64 {
        self.exponent(n) + (-self.pole_exponent(n)).max(0)
    }

    /// The factor `1 - ρ ζ^e` of the pole at exponent zero.
    pub fn clearing_factor(&self) -> ZetaLaurent {
        ZetaLaurent::one().minus(&ZetaLaurent::monomial(self.pole_sign, self.pole_zeta))
    }

    fn numerator(&self, n: i64) -> ZetaLaurent {
        let sign = if self.alternating && n.rem_euclid(2) == 1 { -1 } else { 1 };
        ZetaLaurent::monomial(sign, self.zeta_step * n)
    }

    fn pole(&self, n: i64) -> Monomial<ZetaLaurent> {
        Monomial::new(ZetaLaurent::monomial(self.pole_sign, self.pole_zeta), self.pole_exponent(n))
    }

    /// Summand `n` as a lazy product.
    pub fn term(&self, n: i64) -> FactorProduct<ZetaLaurent> {
        FactorProduct::monomial(Monomial::new(self.numerator(n), self.exponent(n))).binomial(&self.pole(n), -1)
    }

    /// Inclusive summation range for truncation order `order`.
    pub fn range(&self, order: usize) -> Result<(i64, i64)> {
        self.range_through(order as i64)
    }

    fn range_through(&self, top: i64) -> Result<(i64, i64)> {
        self.validate()?;
        let mut hi = 0;
        loop {
            let grows = self.pole_exponent(hi) > 0 && self.quad2 * (2 * hi + 1) + self.lin2 > 0;
            if grows && self.term_bound(hi) > top {
                break;
            }
            hi += 1;
        }
        let mut lo = 0;
        loop {
            let slope = self.quad2 * (1 - 2 * lo) - (self.lin2 - 2 * self.pole_step);
            let grows = self.pole_exponent(lo) < 0 && slope > 0;
            if grows && self.term_bound(lo) > top {
                break;
            }
            lo -= 1;
        }
        Ok((lo + 1, hi - 1))
    }

    fn expand_impl(&self, top: i64, cleared: bool) -> Result<QLaurent<ZetaLaurent>> {
        let (lo, hi) = self.range_through(top)?;
        let clear = self.clearing_factor();
        let low = (lo..=hi).map(|n| self.term_bound(n)).min().unwrap_or(0).min(0).min(top);
        let mut acc = QLaurent::new(low, ZSeries::zero((top - low) as usize));
        for n in lo..=hi {
            let bound = self.term_bound(n);
            if bound > top {
                continue;
            }
            let term = if self.pole_exponent(n) == 0 {
                if !cleared {
                    return Err(Error::SingularPole(n));
                }
                FactorProduct::monomial(Monomial::new(self.numerator(n), self.exponent(n)))
            } else if cleared {
                self.term(n).times_scalar(&clear)
            } else {
                self.term(n)
            };
            let e = term.expand(top)?;
            if let Some(found) = e.low_order() {
                if found < bound {
                    return Err(Error::BoundViolation { claimed: bound, found });
                }
            }
            acc = acc.add(&e);
        }
        Ok(acc)
    }

    /// The sum as a Laurent series in q, exact through `q^top`.
    pub fn expand_laurent(&self, top: i64) -> Result<QLaurent<ZetaLaurent>> {
        self.expand_impl(top, false)
    }

    /// `(1 - ρ ζ^e) · Σ` as a Laurent series in q, exact through `q^top`.
    pub fn expand_cleared_laurent(&self, top: i64) -> Result<QLaurent<ZetaLaurent>> {
        self.expand_impl(top, true)
    }

    /// The sum through `q^order`; fails with [`Error::SingularPole`] if some
    /// pole factor is a constant.
    pub fn expand(&self, order: usize) -> Result<ZSeries> {
        self.expand_laurent(order as i64)?.to_series(order)
    }

    /// `(1 - ρ ζ^e) · Σ`, which is a ζ-Laurent series even when a pole factor
    /// is constant.
    pub fn expand_cleared(&self, order: usize) -> Result<ZSeries> {
        self.expand_cleared_laurent(order as i64)?.to_series(order)
    }
}

/// Free-function form of [`BilateralSpec::expand`].
pub fn bilateral_expand(spec: &BilateralSpec, order: usize) -> Result<ZSeries> {
    spec.expand(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Series;

    /// Direct summation over `|n| <= 30`: each summand is `q^E` times the
    /// inverse of `1 - ρζ^e q^p` computed by generic series inversion after
    /// multiplying through by `q^{-p}` when `p < 0`.
    fn direct(spec: &BilateralSpec, order: usize) -> QLaurent<ZetaLaurent> {
        let top = order as i64;
        let mut acc = QLaurent::<ZetaLaurent>::zero_through(top);
        let rho = ZetaLaurent::monomial(spec.pole_sign, spec.pole_zeta);
        for n in -30..=30i64 {
            let num = spec.numerator(n);
            let e = spec.exponent(n);
            let p = spec.pole_exponent(n);
            let m = 2 * order + 80;
            let term = if p > 0 {
                let mut d = Series::one(m);
                d.add_at(p as usize, &rho.negated());
                QLaurent::new(e, d.invert().unwrap().scale(&num))
            } else {
                // 1/(1 - ρ q^p) = q^{-p} / (q^{-p} - ρ)
                let mut d = Series::constant(rho.negated(), m);
                d.add_at((-p) as usize, &ZetaLaurent::one());
                QLaurent::new(e - p, d.invert().unwrap().scale(&num))
            };
            acc = acc.add(&term);
        }
        acc
    }

    fn check_against_direct(spec: &BilateralSpec, order: usize) {
        let ours = spec.expand_laurent(order as i64).unwrap();
        let theirs = direct(spec, order);
        for e in -10..=order as i64 {
            assert_eq!(ours.coefficient(e).unwrap(), theirs.coefficient(e).unwrap(), "{spec:?} at q^{e}");
        }
    }

    #[test]
    fn example_constant_term() {
        let s = BilateralSpec::example().expand(10).unwrap();
        assert_eq!(s.coefficient(0).unwrap(), &ZetaLaurent::from_terms([(0, 1), (-1, -1)]));
    }

    #[test]
    fn example_matches_direct_summation() {
        check_against_direct(&BilateralSpec::example(), 20);
    }

    #[test]
    fn zero_order_with_positive_bounds() {
        let spec = BilateralSpec { quad2: 2, lin2: 2, pole_shift: -1, ..BilateralSpec::example() };
        let lo = (-10..=10).map(|n| spec.term_bound(n)).min().unwrap();
        assert_eq!(lo, 1);
        assert!(spec.expand(0).unwrap().is_zero());
    }

    #[test]
    fn mu_and_appell_kernels_match_direct_summation() {
        let specs = [
            // starts at q^-1
            BilateralSpec { alternating: true, quad2: 4, lin2: 8, zeta_step: 0, pole_sign: -1, pole_zeta: 1, pole_step: 2, pole_shift: 1 },
            // μ(z + 1/2 + τ, 1/2; 2τ) kernel
            BilateralSpec { alternating: false, quad2: 2, lin2: 2, zeta_step: 0, pole_sign: -1, pole_zeta: 1, pole_step: 2, pole_shift: 1 },
            // A_2(z + 1/2 + τ, 1/2 + τ; 2τ) kernel with ζ^n
            BilateralSpec { alternating: true, quad2: 4, lin2: 6, zeta_step: 1, pole_sign: -1, pole_zeta: 1, pole_step: 2, pole_shift: 1 },
            BilateralSpec { alternating: true, quad2: 3, lin2: 1, zeta_step: -1, pole_sign: 1, pole_zeta: 1, pole_step: 3, pole_shift: 2 },
        ];
        for s in &specs {
            check_against_direct(s, 20);
        }
    }

    #[test]
    fn singular_pole_needs_clearing() {
        let spec = BilateralSpec { alternating: true, quad2: 2, lin2: 2, zeta_step: 0, pole_sign: 1, pole_zeta: 1, pole_step: 1, pole_shift: 0 };
        assert_eq!(spec.expand(10).unwrap_err(), Error::SingularPole(0));
        let cleared = spec.expand_cleared(10).unwrap();
        // the n = 0 summand contributes exactly 1 after clearing
        assert_eq!(cleared.coefficient(0).unwrap(), &ZetaLaurent::one());
    }

    #[test]
    fn divergent_specs_are_rejected() {
        let bad = BilateralSpec { pole_step: 0, ..BilateralSpec::example() };
        assert!(matches!(bad.expand(5), Err(Error::DivergentSpec(_))));
        let bad = BilateralSpec { quad2: -2, ..BilateralSpec::example() };
        assert!(matches!(bad.expand(5), Err(Error::DivergentSpec(_))));
    }
}
