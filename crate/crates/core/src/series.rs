//! Truncated power series in q.

use num_bigint::BigInt;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::ring::{Mod2, Ring};
use crate::zeta::ZetaLaurent;

/// `c_0 + c_1 q + ... + c_N q^N + O(q^{N+1})`, exact through `q^N`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<R> {
    coeffs: Vec<R>,
}

/// Two-variable series: coefficients are Laurent polynomials in ζ.
pub type ZSeries = Series<ZetaLaurent>;

impl<R: Ring> Series<R> {
    /// Takes `coeffs[0..=order]`; missing entries are zero.
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        Series { coeffs }
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize) -> R) -> Self {
        Series { coeffs: (0..=order).map(&mut f).collect() }
    }

    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![R::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(R::one(), 0, order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Self::monomial(c, 0, order)
    }

    /// `c q^k`; vanishes when `k > order`.
    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `q^n`.
    pub fn coefficient(&self, n: usize) -> Result<&R> {
        self.coeffs.get(n).ok_or(Error::OutOfRange { index: n as i64, order: self.order() as i64 })
    }

    pub fn set(&mut self, n: usize, c: R) {
        if n < self.coeffs.len() {
            self.coeffs[n] = c;
        }
    }

    pub fn add_at(&mut self, n: usize, c: &R) {
        if n < self.coeffs.len() {
            self.coeffs[n].add_in(c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Drops coefficients beyond `order` (or pads with zeros, which only makes
    /// sense when the series is known to be a polynomial).
    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Series { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.plus(b)).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Series { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.minus(b)).collect() })
    }

    pub fn add_assign(&mut self, other: &Self) -> Result<()> {
        self.check_order(other)?;
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            a.add_in(b);
        }
        Ok(())
    }

    pub fn neg(&self) -> Self {
        Series { coeffs: self.coeffs.iter().map(Ring::negated).collect() }
    }

    pub fn scale(&self, c: &R) -> Self {
        Series { coeffs: self.coeffs.iter().map(|a| a.times(c)).collect() }
    }

    /// Cauchy product through `q^N`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j].add_product(a, b);
            }
        }
        Ok(Series { coeffs: out })
    }

    /// Product truncated to the smaller of the two orders.
    pub fn mul_truncating(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        self.truncate(n).mul(&other.truncate(n)).expect("orders equalized")
    }

    pub fn add_truncating(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        self.truncate(n).add(&other.truncate(n)).expect("orders equalized")
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn invert(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].unit_inverse().ok_or(Error::NotInvertible)?;
        let n = self.order();
        let support: Vec<usize> = (1..=n).filter(|&k| !self.coeffs[k].is_zero()).collect();
        let mut out: Vec<R> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for m in 1..=n {
            let mut acc = R::zero();
            for &k in support.iter().take_while(|&&k| k <= m) {
                acc.add_product(&self.coeffs[k], &out[m - k]);
            }
            out.push(acc.negated().times(&inv0));
        }
        Ok(Series { coeffs: out })
    }

    /// Exact quotient `self / divisor`.
    ///
    /// The divisor's leading coefficient must divide every intermediate
    /// remainder; leading zeros in both operands are cancelled.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        self.check_order(divisor)?;
        let n = self.order();
        let v = divisor.valuation().ok_or(Error::InexactDivision("division by zero series".into()))?;
        if let Some(u) = self.valuation() {
            if u < v {
                return Err(Error::InexactDivision(format!("numerator valuation {u} below divisor valuation {v}")));
            }
        } else {
            return Ok(Self::zero(n - v));
        }
        // the quotient is known through q^{N - v}
        let m = n - v;
        let lead = &divisor.coeffs[v];
        let mut rem: Vec<R> = self.coeffs[v..].to_vec();
        let mut out = Vec::with_capacity(m + 1);
        let support: Vec<usize> = (1..=m).filter(|&k| !divisor.coeffs[v + k].is_zero()).collect();
        for i in 0..=m {
            let c = rem[i]
                .try_quotient(lead)
                .ok_or_else(|| Error::InexactDivision(format!("coefficient of q^{i} not divisible")))?;
            if !c.is_zero() {
                for &k in support.iter().take_while(|&&k| i + k <= m) {
                    rem[i + k].sub_product(&c, &divisor.coeffs[v + k]);
                }
            }
            out.push(c);
        }
        Ok(Series { coeffs: out })
    }

    /// In place `self *= (1 - c q^k)`, `k >= 1`.
    pub fn mul_one_minus(&mut self, c: &R, k: usize) {
        assert!(k >= 1, "mul_one_minus needs k >= 1");
        let n = self.order();
        for i in (k..=n).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0].sub_product(c, &lo[i - k]);
        }
    }

    /// In place `self /= (1 - c q^k)`, `k >= 1`.
    pub fn div_one_minus(&mut self, c: &R, k: usize) {
        assert!(k >= 1, "div_one_minus needs k >= 1");
        let n = self.order();
        for i in k..=n {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0].add_product(c, &lo[i - k]);
        }
    }

    /// Multiplies by `q^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for i in k..=n {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// `f(q^k)` through the same order; reads `f` only through `q^{⌊N/k⌋}`.
    pub fn substitute_q_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        let n = self.order();
        let mut out = Self::zero(n);
        for i in 0..=n / k {
            out.coeffs[i * k] = self.coeffs[i].clone();
        }
        out
    }

    /// `f(-q)`.
    pub fn negate_q(&self) -> Self {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { c.negated() } else { c.clone() })
                .collect(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl FnMut(&R) -> S) -> Series<S> {
        Series { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// First index where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.order().min(other.order());
        (0..=n).find(|&i| self.coeffs[i] != other.coeffs[i])
    }
}

impl Series<BigInt> {
    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(|c| Value::String(c.to_string())).collect())
    }

    pub fn from_i64s(v: &[i64], order: usize) -> Self {
        Self::from_coeffs(v.iter().map(|&x| BigInt::from(x)).collect(), order)
    }

    pub fn reduce_mod2(&self) -> Series<Mod2> {
        self.map(Mod2::from_bigint)
    }

    pub fn to_zeta(&self) -> ZSeries {
        self.map(|c| ZetaLaurent::constant(c.clone()))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.first_negative().is_none()
    }

    pub fn first_negative(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| c.sign() == num_bigint::Sign::Minus)
    }
}

impl Series<ZetaLaurent> {
    /// Coefficient of `ζ^m q^n`.
    pub fn zeta_coefficient(&self, m: i64, n: usize) -> Result<BigInt> {
        Ok(self.coefficient(n)?.coefficient(m))
    }

    /// The ζ = 1 specialization.
    pub fn at_zeta_one(&self) -> Series<BigInt> {
        self.map(ZetaLaurent::at_one)
    }

    /// ζ ↦ ζ⁻¹ termwise.
    pub fn conjugate(&self) -> Self {
        self.map(ZetaLaurent::conjugate)
    }

    /// ζ ↦ −ζ termwise.
    pub fn negate_zeta(&self) -> Self {
        self.map(ZetaLaurent::negate_zeta)
    }

    pub fn is_conjugation_symmetric(&self) -> bool {
        self.coeffs.iter().all(ZetaLaurent::is_symmetric)
    }

    /// Multiplies every coefficient by a ζ-polynomial.
    pub fn scale_zeta(&self, c: &ZetaLaurent) -> Self {
        self.scale(c)
    }

    /// First `(m, n)` where the two series disagree.
    pub fn first_mismatch(&self, other: &Self) -> Option<(i64, usize)> {
        let n = self.first_difference(other)?;
        let a = &self.coeffs[n];
        let b = &other.coeffs[n];
        let diff = a.minus(b);
        Some((diff.min_exponent().unwrap_or(0), n))
    }

    /// `[{"m":..,"n":..,"c":".."}, ...]` in (n, m) order.
    pub fn to_json_refined(&self) -> Value {
        let mut out = Vec::new();
        for (n, c) in self.coeffs.iter().enumerate() {
            for (m, v) in c.terms() {
                out.push(serde_json::json!({"m": m, "n": n, "c": v.to_string()}));
            }
        }
        Value::Array(out)
    }

    /// One `{exponent: coefficient}` object per power of q.
    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(ZetaLaurent::to_json).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[i64], n: usize) -> Series<BigInt> {
        Series::from_i64s(v, n)
    }

    #[test]
    fn difference_of_squares() {
        let a = s(&[1, 1], 5);
        let b = s(&[1, -1], 5);
        assert_eq!(a.mul(&b).unwrap(), s(&[1, 0, -1], 5));
    }

    #[test]
    fn finite_pochhammer_by_repeated_multiplication() {
        let mut p = Series::<BigInt>::one(10);
        for k in 1..=3 {
            p = p.mul(&Series::from_i64s(&[1], 10).sub(&Series::monomial(BigInt::from(1), k, 10)).unwrap()).unwrap();
        }
        assert_eq!(p, s(&[1, -1, -1, 0, 1, 1, -1], 10));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let err = s(&[1], 3).mul(&s(&[1], 4)).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 3, right: 4 });
        assert_eq!(s(&[1, 2], 3).mul_truncating(&s(&[1, 1], 4)), s(&[1, 3, 2], 3));
    }

    #[test]
    fn geometric_inverse() {
        let inv = s(&[1, -1], 8).invert().unwrap();
        assert_eq!(inv, s(&[1; 9], 8));
        assert_eq!(s(&[2, 1], 3).invert().unwrap_err(), Error::NotInvertible);
    }

    #[test]
    fn euler_product_inverts_to_partition_numbers() {
        let mut e = Series::<BigInt>::one(10);
        for k in 1..=10 {
            e.mul_one_minus(&BigInt::from(1), k);
        }
        assert_eq!(e.invert().unwrap(), s(&[1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42], 10));
    }

    #[test]
    fn exact_division_with_leading_zeros() {
        let a = s(&[0, 0, 2, 6, 4], 6);
        let b = s(&[0, 2, 2], 6);
        let q = a.div(&b).unwrap();
        assert_eq!(q.order(), 5);
        assert_eq!(q, s(&[0, 1, 2], 5));
        assert!(s(&[1, 1], 3).div(&s(&[2, 1], 3)).is_err());
    }

    #[test]
    fn one_minus_factors_roundtrip() {
        let f = s(&[3, -1, 4, 1, -5, 9, 2, -6], 7);
        let mut g = f.clone();
        g.mul_one_minus(&BigInt::from(-2), 3);
        g.div_one_minus(&BigInt::from(-2), 3);
        assert_eq!(f, g);
    }

    #[test]
    fn reindexing() {
        assert_eq!(s(&[1, 1], 6).substitute_q_power(2), s(&[1, 0, 1], 6));
        assert_eq!(s(&[1; 6], 5).negate_q(), s(&[1, -1, 1, -1, 1, -1], 5));
        assert_eq!(s(&[1, 2], 3).shift_up(2), s(&[0, 0, 1, 2], 3));
        assert!(s(&[1], 2).coefficient(3).is_err());
    }

    #[test]
    fn json_uses_decimal_strings() {
        assert_eq!(s(&[1, -2], 1).to_json(), serde_json::json!(["1", "-2"]));
    }
}
