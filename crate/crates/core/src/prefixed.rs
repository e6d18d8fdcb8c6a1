//! Series with fractional prefactors `i^u ζ^{h/2} q^{e/24}`.

use crate::error::{Error, Result};
use crate::laurent::QLaurent;
use crate::series::{Series, ZSeries};
use crate::zeta::ZetaLaurent;

/// `i^unit · ζ^{zeta_half/2} · q^{q24/24} · body`.
///
/// The fourth root of unity is kept apart from the integer body so that all
/// body arithmetic stays over ℤ[ζ, ζ⁻¹].
#[derive(Clone, Debug, PartialEq)]
pub struct PrefixedSeries {
    pub unit: u8,
    pub zeta_half: i64,
    pub q24: i64,
    pub body: QLaurent<ZetaLaurent>,
}

impl PrefixedSeries {
    pub fn new(unit: i64, zeta_half: i64, q24: i64, body: QLaurent<ZetaLaurent>) -> Self {
        PrefixedSeries { unit: unit.rem_euclid(4) as u8, zeta_half, q24, body }
    }

    pub fn from_series(body: ZSeries) -> Self {
        Self::new(0, 0, 0, QLaurent::from_series(body))
    }

    pub fn one(order: usize) -> Self {
        Self::from_series(Series::one(order))
    }

    /// Exact through `q^{q24/24 + body.top()}`.
    pub fn top(&self) -> i64 {
        self.body.top()
    }

    /// Moves integral parts of the prefactor into the body: afterwards
    /// `unit ∈ {0,1}`, `zeta_half ∈ {0,1}`, `q24 ∈ [0,24)`.
    pub fn normalized(&self) -> Self {
        let mut body = self.body.clone();
        let mut unit = self.unit as i64;
        if unit >= 2 {
            body = body.neg();
            unit -= 2;
        }
        let zfloor = self.zeta_half.div_euclid(2);
        if zfloor != 0 {
            body = QLaurent::new(body.valuation, body.body.map(|c| c.shift(zfloor)));
        }
        let qfloor = self.q24.div_euclid(24);
        body = body.shift(qfloor);
        PrefixedSeries {
            unit: unit as u8,
            zeta_half: self.zeta_half.rem_euclid(2),
            q24: self.q24.rem_euclid(24),
            body,
        }
    }

    fn lattice(&self) -> (u8, i64, i64) {
        (self.unit, self.zeta_half, self.q24)
    }

    pub fn is_zero(&self) -> bool {
        self.body.body.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Self {
        PrefixedSeries::new(
            self.unit as i64 + other.unit as i64,
            self.zeta_half + other.zeta_half,
            self.q24 + other.q24,
            self.body.mul(&other.body),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = PrefixedSeries::new(0, 0, 0, QLaurent::new(0, Series::one(self.body.body.order())));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplies the prefactor by `i^unit ζ^{zeta_half/2} q^{q24/24}`.
    pub fn times_prefix(&self, unit: i64, zeta_half: i64, q24: i64) -> Self {
        PrefixedSeries::new(self.unit as i64 + unit, self.zeta_half + zeta_half, self.q24 + q24, self.body.clone())
    }

    pub fn scale(&self, c: &ZetaLaurent) -> Self {
        PrefixedSeries { body: self.body.scale(c), ..self.clone() }
    }

    pub fn neg(&self) -> Self {
        PrefixedSeries { body: self.body.neg(), ..self.clone() }
    }

    /// Strips leading zero coefficients of the body into its valuation.
    fn tightened(body: &QLaurent<ZetaLaurent>) -> Option<QLaurent<ZetaLaurent>> {
        let w = body.body.valuation()?;
        let n = body.body.order();
        let s = Series::from_fn(n - w, |i| body.body.coeffs()[i + w].clone());
        Some(QLaurent::new(body.valuation + w as i64, s))
    }

    /// Exact quotient; fails if any body coefficient does not divide exactly.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let d = Self::tightened(&other.body).ok_or(Error::ThetaZero)?;
        let n = self.body.body.order().min(d.body.order());
        let quot = self.body.body.truncate(n).div(&d.body.truncate(n))?;
        Ok(PrefixedSeries::new(
            self.unit as i64 - other.unit as i64,
            self.zeta_half - other.zeta_half,
            self.q24 - other.q24,
            QLaurent::new(self.body.valuation - d.valuation, quot),
        ))
    }

    /// Multiplicative inverse; the leading body coefficient must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let d = Self::tightened(&self.body).ok_or(Error::NotInvertible)?;
        let inv = d.body.invert()?;
        Ok(PrefixedSeries::new(
            -(self.unit as i64),
            -self.zeta_half,
            -self.q24,
            QLaurent::new(-d.valuation, inv),
        ))
    }

    /// Sum; both operands must live on the same fractional lattice coset.
    pub fn add(&self, other: &Self) -> Result<Self> {
        let a = self.normalized();
        let b = other.normalized();
        if a.lattice() != b.lattice() {
            if a.is_zero() {
                return Ok(PrefixedSeries { body: b.body.add(&QLaurent::zero_through(a.top())), ..b });
            }
            if b.is_zero() {
                return Ok(PrefixedSeries { body: a.body.add(&QLaurent::zero_through(b.top())), ..a });
            }
            return Err(Error::LatticeMismatch(format!(
                "prefix (i^{}, z^{}/2, q^{}/24) vs (i^{}, z^{}/2, q^{}/24)",
                a.unit, a.zeta_half, a.q24, b.unit, b.zeta_half, b.q24
            )));
        }
        Ok(PrefixedSeries { body: a.body.add(&b.body), ..a })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Sums several terms on a common lattice coset.
    pub fn sum<'a>(terms: impl IntoIterator<Item = &'a PrefixedSeries>) -> Result<Self> {
        let mut it = terms.into_iter();
        let first = it.next().ok_or_else(|| Error::Domain("empty sum".into()))?.clone();
        it.try_fold(first, |acc, t| acc.add(t))
    }

    /// The integer-exponent series this value equals, through `q^order`.
    pub fn into_integral(&self, order: usize) -> Result<ZSeries> {
        let a = self.normalized();
        if a.lattice() != (0, 0, 0) && !a.is_zero() {
            return Err(Error::LatticeMismatch(format!(
                "offsets do not normalize to integers: i^{}, z^{}/2, q^{}/24",
                a.unit, a.zeta_half, a.q24
            )));
        }
        a.body.to_series(order)
    }

    /// Compares two values; `Ok(None)` means equal through the common order,
    /// `Ok(Some((m, n)))` is the first mismatch in body coordinates.
    pub fn compare(&self, other: &Self) -> Result<Option<(i64, i64)>> {
        let d = self.sub(other)?;
        let b = &d.body;
        Ok(b.body.valuation().map(|i| {
            let c = &b.body.coeffs()[i];
            (c.min_exponent().unwrap_or(0), b.valuation + i as i64)
        }))
    }

    /// Exact equality through the common order.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        Ok(self.compare(other)?.is_none())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn body(v: &[i64], order: usize) -> QLaurent<ZetaLaurent> {
        QLaurent::from_series(Series::from_coeffs(v.iter().map(|&x| ZetaLaurent::constant(x)).collect(), order))
    }

    #[test]
    fn normalization_moves_integer_offsets() {
        let p = PrefixedSeries::new(2, 3, 49, body(&[1, 1], 5));
        let n = p.normalized();
        assert_eq!((n.unit, n.zeta_half, n.q24), (0, 1, 1));
        assert_eq!(n.body.valuation, 2);
        assert_eq!(n.body.body.coeffs()[0], ZetaLaurent::monomial(-1, 1));
    }

    #[test]
    fn lattice_mismatch_is_reported() {
        let a = PrefixedSeries::new(0, 0, 1, body(&[1], 3));
        let b = PrefixedSeries::new(0, 0, 2, body(&[1], 3));
        assert!(matches!(a.add(&b), Err(Error::LatticeMismatch(_))));
        assert!(matches!(a.into_integral(3), Err(Error::LatticeMismatch(_))));
    }

    #[test]
    fn inverse_cancels_prefix() {
        let a = PrefixedSeries::new(1, 1, 1, body(&[0, 1, -1, 3], 6));
        let one = a.mul(&a.inverse().unwrap());
        let s = one.into_integral(4).unwrap();
        assert_eq!(s, Series::one(4));
    }

    #[test]
    fn exact_division_by_non_unit() {
        let a = PrefixedSeries::new(0, 0, 0, body(&[2, 4, 6], 4));
        let b = PrefixedSeries::new(0, 0, 0, body(&[2, 2], 4));
        let q = a.div(&b).unwrap().into_integral(4).unwrap();
        assert_eq!(q, Series::from_coeffs(vec![1.into(), 1.into(), 2.into(), (-2).into(), 2.into()], 4));
        let odd = PrefixedSeries::new(0, 0, 0, body(&[1], 4));
        assert!(odd.div(&b).is_err());
    }
}
