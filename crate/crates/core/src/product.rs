//! Lazy products of q-Pochhammer factors.
//!
//! A [`FactorProduct`] is `coeff · q^shift · Π (1 - c_i q^{k_i})^{p_i}` together
//! with a list of infinite Pochhammer tails. Factors with `k <= 0` are
//! normalized exactly before expansion:
//!
//! * `k < 0`: `1 - c q^k = -c q^k (1 - c⁻¹ q^{-k})`
//! * `k = 0`: the constant `1 - c` moves into the coefficient.
//!
//! This handles negative-index Pochhammer symbols and the `n < 0` terms of
//! bilateral sums without any special casing at the call sites.

use crate::error::{Error, Result};
use crate::laurent::QLaurent;
use crate::ring::Ring;
use crate::series::Series;

/// `c q^k`
#[derive(Clone, Debug, PartialEq)]
pub struct Monomial<R> {
    pub coeff: R,
    pub q_exp: i64,
}

impl<R: Ring> Monomial<R> {
    pub fn new(coeff: R, q_exp: i64) -> Self {
        Monomial { coeff, q_exp }
    }

    /// `q^k`
    pub fn q(k: i64) -> Self {
        Monomial { coeff: R::one(), q_exp: k }
    }

    pub fn constant(c: R) -> Self {
        Monomial { coeff: c, q_exp: 0 }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial { coeff: self.coeff.times(&other.coeff), q_exp: self.q_exp + other.q_exp }
    }

    /// Exact quotient; the coefficient ratio must exist in the ring.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let coeff = self
            .coeff
            .try_quotient(&other.coeff)
            .ok_or_else(|| Error::InexactDivision(format!("{:?} / {:?}", self.coeff, other.coeff)))?;
        Ok(Monomial { coeff, q_exp: self.q_exp - other.q_exp })
    }

    pub fn neg(&self) -> Self {
        Monomial { coeff: self.coeff.negated(), q_exp: self.q_exp }
    }

    pub fn shift(&self, k: i64) -> Self {
        Monomial { coeff: self.coeff.clone(), q_exp: self.q_exp + k }
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(Monomial { coeff: self.coeff.pow(e as u32), q_exp: self.q_exp * e })
        } else {
            let inv = self
                .coeff
                .unit_inverse()
                .ok_or_else(|| Error::InexactDivision(format!("{:?} is not a unit", self.coeff)))?;
            Ok(Monomial { coeff: inv.pow((-e) as u32), q_exp: self.q_exp * e })
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }
}

/// Length of a Pochhammer symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochLength {
    Finite(i64),
    Infinite,
}

#[derive(Clone, Debug, PartialEq)]
struct Tail<R> {
    start: Monomial<R>,
    step: i64,
    power: i32,
}

/// A lazily expanded product of binomials `(1 - c q^k)^p`.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorProduct<R> {
    coeff: R,
    shift: i64,
    factors: Vec<(Monomial<R>, i32)>,
    tails: Vec<Tail<R>>,
}

/// A product after exact normalization: all binomials have `k >= 1`.
#[derive(Clone, Debug)]
pub struct Normalized<R> {
    pub coeff: R,
    pub shift: i64,
    pub factors: Vec<(Monomial<R>, i32)>,
    tails: Vec<Tail<R>>,
}

impl<R: Ring> Default for FactorProduct<R> {
    fn default() -> Self {
        Self::one()
    }
}

impl<R: Ring> FactorProduct<R> {
    pub fn one() -> Self {
        FactorProduct { coeff: R::one(), shift: 0, factors: Vec::new(), tails: Vec::new() }
    }

    pub fn monomial(m: Monomial<R>) -> Self {
        FactorProduct { coeff: m.coeff, shift: m.q_exp, factors: Vec::new(), tails: Vec::new() }
    }

    pub fn scalar(c: R) -> Self {
        Self::monomial(Monomial::constant(c))
    }

    /// Multiplies by `m`.
    pub fn times(mut self, m: &Monomial<R>) -> Self {
        self.coeff = self.coeff.times(&m.coeff);
        self.shift += m.q_exp;
        self
    }

    pub fn times_scalar(mut self, c: &R) -> Self {
        self.coeff = self.coeff.times(c);
        self
    }

    /// Multiplies by `q^k`.
    pub fn times_q(mut self, k: i64) -> Self {
        self.shift += k;
        self
    }

    /// Multiplies by `(1 - a)^power`.
    pub fn binomial(mut self, a: &Monomial<R>, power: i32) -> Self {
        if power != 0 {
            self.factors.push((a.clone(), power));
        }
        self
    }

    /// Multiplies by `(a; q^step)_len ^ power`.
    ///
    /// Negative lengths follow `(a;q)_{-n} = 1 / (a q^{-n}; q)_n`.
    pub fn poch(mut self, a: &Monomial<R>, step: i64, len: PochLength, power: i32) -> Self {
        assert!(step >= 1, "Pochhammer base must be q^step with step >= 1");
        match len {
            PochLength::Finite(n) if n >= 0 => {
                for j in 0..n {
                    self.factors.push((a.shift(step * j), power));
                }
            }
            PochLength::Finite(n) => {
                let m = -n;
                for j in 0..m {
                    self.factors.push((a.shift(step * (j - m)), -power));
                }
            }
            PochLength::Infinite => {
                self.tails.push(Tail { start: a.clone(), step, power });
            }
        }
        self
    }

    /// `(a; q^step)_n` for finite `n` (any sign).
    pub fn poch_n(self, a: &Monomial<R>, step: i64, n: i64) -> Self {
        self.poch(a, step, PochLength::Finite(n), 1)
    }

    /// `1 / (a; q^step)_n`
    pub fn inv_poch_n(self, a: &Monomial<R>, step: i64, n: i64) -> Self {
        self.poch(a, step, PochLength::Finite(n), -1)
    }

    /// `(a; q^step)_∞`
    pub fn poch_inf(self, a: &Monomial<R>, step: i64) -> Self {
        self.poch(a, step, PochLength::Infinite, 1)
    }

    /// `1 / (a; q^step)_∞`
    pub fn inv_poch_inf(self, a: &Monomial<R>, step: i64) -> Self {
        self.poch(a, step, PochLength::Infinite, -1)
    }

    pub fn mul(mut self, other: &Self) -> Self {
        self.coeff = self.coeff.times(&other.coeff);
        self.shift += other.shift;
        self.factors.extend(other.factors.iter().cloned());
        self.tails.extend(other.tails.iter().cloned());
        self
    }

    /// Moves every factor with `k <= 0` into the coefficient and shift.
    pub fn normalize(&self) -> Result<Normalized<R>> {
        let mut coeff = self.coeff.clone();
        let mut shift = self.shift;
        let mut factors = Vec::with_capacity(self.factors.len());
        let mut tails = Vec::with_capacity(self.tails.len());
        let absorb = |m: &Monomial<R>, p: i32, coeff: &mut R, shift: &mut i64, out: &mut Vec<(Monomial<R>, i32)>| -> Result<()> {
            if m.is_zero() {
                return Ok(());
            }
            if m.q_exp > 0 {
                out.push((m.clone(), p));
                return Ok(());
            }
            if m.q_exp == 0 {
                let c = R::one().minus(&m.coeff);
                if p > 0 {
                    *coeff = coeff.times(&c.pow(p as u32));
                } else {
                    // non-units are divided out of the coefficient exactly, so a
                    // caller may pre-multiply a clearing factor
                    let d = c.pow((-p) as u32);
                    *coeff = match d.unit_inverse() {
                        Some(inv) => coeff.times(&inv),
                        None => coeff.try_quotient(&d).ok_or_else(|| {
                            Error::SingularPochhammer(format!("1 - ({:?}) does not divide the coefficient", m.coeff))
                        })?,
                    };
                }
                return Ok(());
            }
            // 1 - c q^k = (-c q^k)(1 - c^{-1} q^{-k})
            let lead = Monomial::new(m.coeff.negated(), m.q_exp)
                .pow(p as i64)
                .map_err(|_| Error::SingularPochhammer(format!("{:?} is not a unit", m.coeff)))?;
            *coeff = coeff.times(&lead.coeff);
            *shift += lead.q_exp;
            let inv = m.coeff.unit_inverse().ok_or_else(|| Error::SingularPochhammer(format!("{:?} is not a unit", m.coeff)))?;
            out.push((Monomial::new(inv, -m.q_exp), p));
            Ok(())
        };
        for (m, p) in &self.factors {
            absorb(m, *p, &mut coeff, &mut shift, &mut factors)?;
        }
        for t in &self.tails {
            if t.start.is_zero() {
                continue;
            }
            let mut j = 0;
            while t.start.q_exp + t.step * j <= 0 {
                absorb(&t.start.shift(t.step * j), t.power, &mut coeff, &mut shift, &mut factors)?;
                j += 1;
            }
            tails.push(Tail { start: t.start.shift(t.step * j), step: t.step, power: t.power });
        }
        Ok(Normalized { coeff, shift, factors, tails })
    }

    /// Lower bound for the q-order of the product (exact unless the
    /// coefficient vanishes).
    pub fn min_order(&self) -> Result<i64> {
        Ok(self.normalize()?.shift)
    }

    /// Expands through absolute order `top`.
    pub fn expand(&self, top: i64) -> Result<QLaurent<R>> {
        self.normalize()?.expand(top)
    }

    /// Expands as an ordinary power series through `q^order`.
    pub fn expand_series(&self, order: usize) -> Result<Series<R>> {
        self.expand(order as i64)?.to_series(order)
    }
}

impl<R: Ring> Normalized<R> {
    pub fn expand(&self, top: i64) -> Result<QLaurent<R>> {
        if self.coeff.is_zero() || top < self.shift {
            return Ok(QLaurent::zero_through(top));
        }
        let m = (top - self.shift) as usize;
        let mut body = Series::constant(self.coeff.clone(), m);
        let apply = |body: &mut Series<R>, a: &Monomial<R>, p: i32| {
            let k = a.q_exp as usize;
            if k > m {
                return;
            }
            for _ in 0..p.unsigned_abs() {
                if p > 0 {
                    body.mul_one_minus(&a.coeff, k);
                } else {
                    body.div_one_minus(&a.coeff, k);
                }
            }
        };
        for (a, p) in &self.factors {
            apply(&mut body, a, *p);
        }
        for t in &self.tails {
            let mut j = 0;
            while t.start.q_exp + t.step * j <= m as i64 {
                apply(&mut body, &t.start.shift(t.step * j), t.power);
                j += 1;
            }
        }
        Ok(QLaurent::new(self.shift, body))
    }
}

/// `(a; q^step)_n` as a series through `q^order`.
pub fn pochhammer<R: Ring>(a: &Monomial<R>, step: i64, len: PochLength, order: usize) -> Result<Series<R>> {
    FactorProduct::one().poch(a, step, len, 1).expand_series(order)
}

/// Sums products whose q-orders are bounded below, through absolute `top`.
pub fn sum_products<R: Ring>(top: i64, terms: impl IntoIterator<Item = FactorProduct<R>>) -> Result<QLaurent<R>> {
    let mut acc: Option<QLaurent<R>> = None;
    for t in terms {
        let e = t.expand(top)?;
        acc = Some(match acc {
            None => e,
            Some(a) => a.add(&e),
        });
    }
    Ok(acc.unwrap_or_else(|| QLaurent::zero_through(top)))
}

/// `Σ_{n >= start} term(n)` through `q^top`.
///
/// The loop stops at the first `n >= stable_from` whose term has minimal
/// order above `top`; callers pick `stable_from` so that term orders are
/// increasing from there on.
pub fn sum_unilateral<R: Ring>(
    top: i64,
    start: i64,
    stable_from: i64,
    mut term: impl FnMut(i64) -> Result<FactorProduct<R>>,
) -> Result<QLaurent<R>> {
    let mut acc = QLaurent::zero_through(top);
    let cap = stable_from.max(start) + 8 * (top.abs() + 8) + 64;
    let mut n = start;
    let mut prev: Option<i64> = None;
    loop {
        if n > cap {
            return Err(Error::DivergentSpec(format!("unilateral sum did not terminate by n = {n}")));
        }
        let t = term(n)?;
        let norm = t.normalize()?;
        let ord = norm.shift;
        if ord > top && n >= stable_from && prev.is_none_or(|p| ord > p) {
            break;
        }
        prev = Some(ord);
        if ord <= top {
            let e = norm.expand(top)?;
            if let Some(low) = e.low_order() {
                if low < ord {
                    return Err(Error::BoundViolation { claimed: ord, found: low });
                }
            }
            acc = acc.add(&e);
        }
        n += 1;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::ZetaLaurent;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    type Z = ZetaLaurent;

    fn zm(c: i64, m: i64, k: i64) -> Monomial<Z> {
        Monomial::new(Z::monomial(c, m), k)
    }

    #[test]
    fn empty_product_is_one() {
        let p = pochhammer(&Monomial::<BigInt>::q(1), 1, PochLength::Finite(0), 5).unwrap();
        assert_eq!(p, Series::one(5));
    }

    #[test]
    fn finite_euler_product() {
        let p = pochhammer(&Monomial::<BigInt>::q(1), 1, PochLength::Finite(3), 8).unwrap();
        assert_eq!(p, Series::from_i64s(&[1, -1, -1, 0, 1, 1, -1], 8));
    }

    #[test]
    fn negative_index_inverts_shifted_product() {
        // (a;q)_{-n} (a q^{-n};q)_n = 1 over the rationals
        let a = Monomial::new(BigRational::new(3.into(), 2.into()), 3);
        for n in 1..=6 {
            let p = FactorProduct::one().poch_n(&a, 1, -n).poch_n(&a.shift(-n), 1, n);
            assert_eq!(p.expand_series(20).unwrap(), Series::one(20), "n = {n}");
        }
        // and over ℤ[ζ, ζ⁻¹] in base q^2, where no factor is constant
        let b = zm(1, 1, 3);
        for n in 1..=4 {
            let p = FactorProduct::one().poch_n(&b, 2, -n).poch_n(&b.shift(-2 * n), 2, n);
            assert_eq!(p.expand_series(20).unwrap(), Series::one(20), "n = {n}");
        }
    }

    #[test]
    fn singular_negative_index_is_rejected() {
        // (ζq;q)_{-1} = 1/(1-ζ), not a Laurent polynomial
        let p = FactorProduct::one().poch_n(&zm(1, 1, 1), 1, -1);
        assert!(matches!(p.expand(10), Err(Error::SingularPochhammer(_))));
    }

    #[test]
    fn negative_exponent_factor_normalizes() {
        // 1/(1 + ζ q^{-2}) = ζ^{-1} q^2 / (1 + ζ^{-1} q^2)
        let lhs = FactorProduct::one().binomial(&zm(-1, 1, -2), -1).expand(12).unwrap();
        let rhs = FactorProduct::monomial(zm(1, -1, 2)).binomial(&zm(-1, -1, 2), -1).expand(12).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.valuation, 2);
    }

    #[test]
    fn infinite_product_with_nonpositive_start() {
        // (q^{-1};q)_∞ = (1-q^{-1})(1-1)(...) = 0
        let z = FactorProduct::one().poch_inf(&Monomial::<BigInt>::q(-1), 1).expand_series(6).unwrap();
        assert!(z.is_zero());
        // (-1;q)_∞ = 2 (-q;q)_∞
        let a = FactorProduct::one().poch_inf(&Monomial::new(BigInt::from(-1), 0), 1).expand_series(10).unwrap();
        let b = FactorProduct::scalar(BigInt::from(2)).poch_inf(&Monomial::new(BigInt::from(-1), 1), 1).expand_series(10).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unilateral_sum_of_geometric_terms() {
        let s = sum_unilateral::<BigInt>(10, 0, 0, |n| Ok(FactorProduct::one().times_q(n))).unwrap();
        assert_eq!(s.to_series(10).unwrap(), Series::from_i64s(&[1; 11], 10));
    }
}
