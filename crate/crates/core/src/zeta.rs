//! Laurent polynomials in ζ with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{Map, Value};

use crate::ring::Ring;

/// A finite sum `Σ c_m ζ^m` with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ZetaLaurent {
    terms: BTreeMap<i64, BigInt>,
}

impl ZetaLaurent {
    /// `c ζ^m`
    pub fn monomial(c: impl Into<BigInt>, m: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !Zero::is_zero(&c) {
            terms.insert(m, c);
        }
        ZetaLaurent { terms }
    }

    /// `ζ^m`
    pub fn zeta(m: i64) -> Self {
        Self::monomial(1, m)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut z = ZetaLaurent::default();
        for (m, c) in iter {
            z.add_term(m, &c.into());
        }
        z
    }

    pub fn add_term(&mut self, m: i64, c: &BigInt) {
        if Zero::is_zero(c) {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(<BigInt as Zero>::zero);
        *slot += c;
        if Zero::is_zero(slot) {
            self.terms.remove(&m);
        }
    }

    /// Coefficient of `ζ^m`.
    pub fn coefficient(&self, m: i64) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `(m, c)` when `self = c ζ^m`.
    pub fn as_monomial(&self) -> Option<(i64, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c))
        } else {
            None
        }
    }

    /// Multiplies by `ζ^k`.
    pub fn shift(&self, k: i64) -> Self {
        ZetaLaurent {
            terms: self.terms.iter().map(|(m, c)| (m + k, c.clone())).collect(),
        }
    }

    /// The substitution ζ ↦ ζ⁻¹.
    pub fn conjugate(&self) -> Self {
        ZetaLaurent {
            terms: self.terms.iter().map(|(m, c)| (-m, c.clone())).collect(),
        }
    }

    /// The substitution ζ ↦ ζ^k (k may be negative).
    pub fn substitute_power(&self, k: i64) -> Self {
        let mut out = ZetaLaurent::default();
        for (m, c) in &self.terms {
            out.add_term(m * k, c);
        }
        out
    }

    /// The substitution ζ ↦ −ζ.
    pub fn negate_zeta(&self) -> Self {
        ZetaLaurent {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, if m.is_odd() { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Value at ζ = 1.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Value at ζ = −1.
    pub fn at_minus_one(&self) -> BigInt {
        self.negate_zeta().at_one()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if Zero::is_zero(c) {
            return ZetaLaurent::default();
        }
        ZetaLaurent {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(m, c)| self.terms.get(&-m) == Some(c))
    }

    /// All coefficients are non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Polynomial long division by a non-monomial divisor.
    fn long_divide(&self, rhs: &Self) -> Option<Self> {
        let dlo = rhs.min_exponent()?;
        let dhi = rhs.max_exponent()?;
        let lead = rhs.terms[&dhi].clone();
        let mut rem = self.clone();
        let mut quot = ZetaLaurent::default();
        let nlo = match self.min_exponent() {
            Some(m) => m,
            None => return Some(quot),
        };
        // the quotient has exponents in [nlo - dlo, nhi - dhi]
        while let Some(rhi) = rem.max_exponent() {
            let e = rhi - dhi;
            if e < nlo - dlo {
                return None;
            }
            let (c, r) = rem.terms[&rhi].div_rem(&lead);
            if !Zero::is_zero(&r) {
                return None;
            }
            for (m, d) in rhs.terms() {
                rem.add_term(m + e, &(-(d * &c)));
            }
            quot.add_term(e, &c);
        }
        Some(quot)
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (m, c) in &self.terms {
            map.insert(m.to_string(), Value::String(c.to_string()));
        }
        Value::Object(map)
    }
}

impl Ring for ZetaLaurent {
    fn zero() -> Self {
        ZetaLaurent::default()
    }

    fn one() -> Self {
        ZetaLaurent::monomial(1, 0)
    }

    fn from_i64(v: i64) -> Self {
        ZetaLaurent::monomial(v, 0)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn is_one(&self) -> bool {
        matches!(self.as_monomial(), Some((0, c)) if One::is_one(c))
    }

    fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_in(rhs);
        out
    }

    fn negated(&self) -> Self {
        ZetaLaurent {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    fn times(&self, rhs: &Self) -> Self {
        let mut out = ZetaLaurent::default();
        out.add_product(self, rhs);
        out
    }

    fn add_in(&mut self, rhs: &Self) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c);
        }
    }

    fn sub_in(&mut self, rhs: &Self) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, &-c);
        }
    }

    fn add_product(&mut self, a: &Self, b: &Self) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma + mb, &(ca * cb));
            }
        }
    }

    fn sub_product(&mut self, a: &Self, b: &Self) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma + mb, &-(ca * cb));
            }
        }
    }

    fn try_quotient(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_empty() {
            return None;
        }
        if let Some((k, c)) = rhs.as_monomial() {
            let mut out = ZetaLaurent::default();
            for (m, v) in &self.terms {
                let (q, r) = v.div_rem(c);
                if !Zero::is_zero(&r) {
                    return None;
                }
                out.terms.insert(m - k, q);
            }
            return Some(out);
        }
        self.long_divide(rhs)
    }
}

impl From<i64> for ZetaLaurent {
    fn from(v: i64) -> Self {
        ZetaLaurent::constant(v)
    }
}

impl From<BigInt> for ZetaLaurent {
    fn from(v: BigInt) -> Self {
        ZetaLaurent::constant(v)
    }
}

impl fmt::Display for ZetaLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match *m {
                0 => write!(f, "{abs}")?,
                _ if One::is_one(&abs) => write!(f, "z^{m}")?,
                _ => write!(f, "{abs}*z^{m}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ZetaLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZL({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zl(pairs: &[(i64, i64)]) -> ZetaLaurent {
        ZetaLaurent::from_terms(pairs.iter().copied())
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let a = zl(&[(1, 2), (-1, 3)]);
        let b = zl(&[(1, -2)]);
        let s = a.plus(&b);
        assert_eq!(s.len(), 1);
        assert_eq!(s.coefficient(-1), BigInt::from(3));
    }

    #[test]
    fn multiplication_convolves_exponents() {
        // (1 - z)(1 - 1/z) = 2 - z - 1/z
        let p = zl(&[(0, 1), (1, -1)]).times(&zl(&[(0, 1), (-1, -1)]));
        assert_eq!(p, zl(&[(0, 2), (1, -1), (-1, -1)]));
        assert!(p.is_symmetric());
    }

    #[test]
    fn long_division_recovers_factor() {
        let a = zl(&[(0, 1), (1, 1)]);
        let b = zl(&[(-2, 3), (0, -1), (3, 5)]);
        let prod = a.times(&b);
        assert_eq!(prod.try_quotient(&a), Some(b.clone()));
        assert_eq!(prod.try_quotient(&b), Some(a));
        assert_eq!(zl(&[(0, 1)]).try_quotient(&zl(&[(0, 1), (1, 1)])), None);
    }

    #[test]
    fn evaluation_and_substitution() {
        let a = zl(&[(-1, 2), (0, 1), (3, -4)]);
        assert_eq!(a.at_one(), BigInt::from(-1));
        assert_eq!(a.at_minus_one(), BigInt::from(3));
        assert_eq!(a.conjugate().coefficient(1), BigInt::from(2));
        assert_eq!(a.substitute_power(2).coefficient(6), BigInt::from(-4));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(zl(&[(-1, -1), (0, 1)]).to_string(), "-z^-1 + 1");
        assert_eq!(ZetaLaurent::zero().to_string(), "0");
    }
}
