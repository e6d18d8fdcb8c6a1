//! Coefficient rings for truncated power series.
//!
//! Four rings ship with the crate: big integers, integers mod 2, rationals and
//! [`ZetaLaurent`](crate::zeta::ZetaLaurent) (Laurent polynomials in ζ over ℤ).

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring with exact arithmetic.
///
/// Method names avoid the `std::ops` names so that both traits can be in scope.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn times(&self, rhs: &Self) -> Self;

    /// Exact quotient `self / rhs`, if it exists in the ring.
    fn try_quotient(&self, rhs: &Self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }

    fn add_in(&mut self, rhs: &Self) {
        *self = self.plus(rhs);
    }

    fn sub_in(&mut self, rhs: &Self) {
        *self = self.minus(rhs);
    }

    /// `self += a * b`
    fn add_product(&mut self, a: &Self, b: &Self) {
        let p = a.times(b);
        self.add_in(&p);
    }

    /// `self -= a * b`
    fn sub_product(&mut self, a: &Self, b: &Self) {
        let p = a.times(b);
        self.sub_in(&p);
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }

    /// Inverse of a unit.
    fn unit_inverse(&self) -> Option<Self> {
        Self::one().try_quotient(self)
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn add_in(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub_in(&mut self, rhs: &Self) {
        *self -= rhs;
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        if !Zero::is_zero(a) && !Zero::is_zero(b) {
            *self += a * b;
        }
    }
    fn sub_product(&mut self, a: &Self, b: &Self) {
        if !Zero::is_zero(a) && !Zero::is_zero(b) {
            *self -= a * b;
        }
    }
    fn try_quotient(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        Zero::is_zero(&r).then_some(q)
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn try_quotient(&self, rhs: &Self) -> Option<Self> {
        (!Zero::is_zero(rhs)).then(|| self / rhs)
    }
}

/// The field with two elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Mod2(pub bool);

impl Mod2 {
    pub fn from_bigint(v: &BigInt) -> Self {
        Mod2(v.is_odd())
    }
}

impl Ring for Mod2 {
    fn zero() -> Self {
        Mod2(false)
    }
    fn one() -> Self {
        Mod2(true)
    }
    fn from_i64(v: i64) -> Self {
        Mod2(v.rem_euclid(2) == 1)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn plus(&self, rhs: &Self) -> Self {
        Mod2(self.0 ^ rhs.0)
    }
    fn negated(&self) -> Self {
        *self
    }
    fn times(&self, rhs: &Self) -> Self {
        Mod2(self.0 & rhs.0)
    }
    fn try_quotient(&self, rhs: &Self) -> Option<Self> {
        rhs.0.then_some(*self)
    }
}

/// Parity of a big integer as a `Mod2`.
pub fn reduce_mod2(v: &BigInt) -> Mod2 {
    Mod2(v.abs().is_odd())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bigint_exact_division() {
        let six = BigInt::from(6);
        assert_eq!(six.try_quotient(&BigInt::from(3)), Some(BigInt::from(2)));
        assert_eq!(six.try_quotient(&BigInt::from(4)), None);
        assert_eq!(six.try_quotient(&BigInt::from(0)), None);
    }

    #[test]
    fn mod2_arithmetic() {
        let one = Mod2::one();
        assert!(one.plus(&one).is_zero());
        assert_eq!(Mod2::from_i64(-3), one);
        assert_eq!(one.try_quotient(&Mod2::zero()), None);
    }

    #[test]
    fn pow_by_squaring() {
        assert_eq!(BigInt::from(3).pow(5), BigInt::from(243));
        assert_eq!(<BigInt as Ring>::pow(&BigInt::from(-2), 0), BigInt::from(1));
    }
}
