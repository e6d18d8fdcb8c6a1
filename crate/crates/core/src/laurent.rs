//! Truncated Laurent series in q: `q^v (c_0 + c_1 q + ...)`.

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::series::Series;

/// `q^valuation · body`, exact through `q^{valuation + body.order()}`.
#[derive(Clone, Debug, PartialEq)]
pub struct QLaurent<R> {
    pub valuation: i64,
    pub body: Series<R>,
}

impl<R: Ring> QLaurent<R> {
    pub fn new(valuation: i64, body: Series<R>) -> Self {
        QLaurent { valuation, body }
    }

    /// The zero series, exact through `q^top`.
    pub fn zero_through(top: i64) -> Self {
        QLaurent { valuation: top, body: Series::zero(0) }
    }

    pub fn from_series(s: Series<R>) -> Self {
        QLaurent { valuation: 0, body: s }
    }

    /// Highest exponent that is known exactly.
    pub fn top(&self) -> i64 {
        self.valuation + self.body.order() as i64
    }

    /// Coefficient of `q^e`.
    pub fn coefficient(&self, e: i64) -> Result<R> {
        if e > self.top() {
            return Err(Error::OutOfRange { index: e, order: self.top() });
        }
        if e < self.valuation {
            return Ok(R::zero());
        }
        Ok(self.body.coefficient((e - self.valuation) as usize)?.clone())
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_order(&self) -> Option<i64> {
        self.body.valuation().map(|v| self.valuation + v as i64)
    }

    /// Re-expresses over exponents `lo..=top` where `lo <= valuation`.
    fn widen(&self, lo: i64, top: i64) -> Series<R> {
        let order = (top - lo) as usize;
        let mut out = Series::zero(order);
        for e in self.valuation.max(lo)..=top.min(self.top()) {
            out.set((e - lo) as usize, self.body.coefficient((e - self.valuation) as usize).unwrap().clone());
        }
        out
    }

    /// Sum, exact through the smaller of the two tops.
    pub fn add(&self, other: &Self) -> Self {
        let top = self.top().min(other.top());
        let lo = self.valuation.min(other.valuation).min(top);
        let a = self.widen(lo, top);
        let b = other.widen(lo, top);
        QLaurent { valuation: lo, body: a.add(&b).expect("same order") }
    }

    pub fn neg(&self) -> Self {
        QLaurent { valuation: self.valuation, body: self.body.neg() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &R) -> Self {
        QLaurent { valuation: self.valuation, body: self.body.scale(c) }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        QLaurent { valuation: self.valuation + k, body: self.body.clone() }
    }

    /// Product, exact through `min(v1 + top2, v2 + top1)`.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.body.order().min(other.body.order());
        let body = self.body.truncate(n).mul(&other.body.truncate(n)).expect("same order");
        QLaurent { valuation: self.valuation + other.valuation, body }
    }

    /// Converts to an ordinary power series through `q^order`.
    ///
    /// Fails when a negative power of q carries a nonzero coefficient or the
    /// series is not known far enough.
    pub fn to_series(&self, order: usize) -> Result<Series<R>> {
        if self.top() < order as i64 {
            return Err(Error::OutOfRange { index: order as i64, order: self.top() });
        }
        if let Some(low) = self.low_order() {
            if low < 0 {
                return Err(Error::Domain(format!("nonzero coefficient at q^{low}")));
            }
        }
        Ok(Series::from_fn(order, |e| self.coefficient(e as i64).unwrap()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn addition_aligns_valuations() {
        let a = QLaurent::new(-2, Series::<BigInt>::from_i64s(&[1, 2, 3], 4));
        let b = QLaurent::new(1, Series::<BigInt>::from_i64s(&[5], 3));
        let s = a.add(&b);
        assert_eq!(s.top(), 2);
        assert_eq!(s.coefficient(-2).unwrap(), BigInt::from(1));
        assert_eq!(s.coefficient(0).unwrap(), BigInt::from(3));
        assert_eq!(s.coefficient(1).unwrap(), BigInt::from(5));
        assert!(s.coefficient(3).is_err());
    }

    #[test]
    fn cancellation_of_negative_powers() {
        let a = QLaurent::new(-1, Series::<BigInt>::from_i64s(&[1, 1], 5));
        let b = QLaurent::new(-1, Series::<BigInt>::from_i64s(&[-1], 5));
        let s = a.add(&b).to_series(4).unwrap();
        assert_eq!(s, Series::from_i64s(&[1], 4));
        assert!(a.to_series(3).is_err());
    }
}
