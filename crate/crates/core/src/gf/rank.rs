//! Incremental builders for the rank generating functions.
//!
//! Each builder keeps the current summand as a truncated series and updates it
//! by the ratio of consecutive summands, so a full build costs `O(N)` sparse
//! passes per summand. The builders are generic over the coefficient ring; ζ is
//! passed in as a ring element, so the same code yields the two-variable series
//! (ζ formal) and the ζ = 1 specialization (over ℤ).

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::series::Series;
use crate::zeta::ZetaLaurent;

/// The pair (ζ, ζ⁻¹) as elements of a coefficient ring.
#[derive(Clone, Debug)]
pub struct ZetaPair<R> {
    pub z: R,
    pub zinv: R,
}

impl ZetaPair<ZetaLaurent> {
    pub fn formal() -> Self {
        ZetaPair { z: ZetaLaurent::zeta(1), zinv: ZetaLaurent::zeta(-1) }
    }

    /// ζ ↦ −ζ
    pub fn formal_negated() -> Self {
        ZetaPair { z: ZetaLaurent::monomial(-1, 1), zinv: ZetaLaurent::monomial(-1, -1) }
    }
}

impl ZetaPair<BigInt> {
    pub fn unit() -> Self {
        ZetaPair { z: BigInt::from(1), zinv: BigInt::from(1) }
    }
}

impl<R: Ring> ZetaPair<R> {
    fn neg(&self) -> (R, R) {
        (self.z.negated(), self.zinv.negated())
    }
}

/// Fails if `term` has a nonzero coefficient below the claimed bound.
fn check_bound<R: Ring>(term: &Series<R>, bound: usize) -> Result<()> {
    match term.valuation() {
        Some(v) if v < bound => Err(Error::BoundViolation { claimed: bound as i64, found: v as i64 }),
        _ => Ok(()),
    }
}

fn neg_one<R: Ring>() -> R {
    R::from_i64(-1)
}

/// `1/(q;q)_∞`
pub fn partitions<R: Ring>(order: usize) -> Series<R> {
    let mut s = Series::one(order);
    for k in 1..=order {
        s.div_one_minus(&R::one(), k);
    }
    s
}

/// `U(ζ;q) = Σ_{n≥1} (-ζq, -ζ⁻¹q; q)_{n-1} q^n`; summand `n` starts at `q^n`.
pub fn strongly_unimodal<R: Ring>(z: &ZetaPair<R>, order: usize) -> Result<Series<R>> {
    let (nz, nzi) = z.neg();
    let mut acc = Series::zero(order);
    let mut t = Series::monomial(R::one(), 1, order);
    for n in 1..=order {
        if n > 1 {
            t.mul_one_minus(&nz, n - 1);
            t.mul_one_minus(&nzi, n - 1);
            t = t.shift_up(1);
        }
        check_bound(&t, n)?;
        acc.add_assign(&t)?;
    }
    Ok(acc)
}

/// `R(ζ;q) = Σ_{n≥0} q^{n²} / (ζq, ζ⁻¹q; q)_n`; summand `n` starts at `q^{n²}`.
pub fn partition_rank<R: Ring>(z: &ZetaPair<R>, order: usize) -> Result<Series<R>> {
    let mut acc = Series::one(order);
    let mut t = Series::one(order);
    let mut n = 1;
    while n * n <= order {
        t = t.shift_up(2 * n - 1);
        t.div_one_minus(&z.z, n);
        t.div_one_minus(&z.zinv, n);
        check_bound(&t, n * n)?;
        acc.add_assign(&t)?;
        n += 1;
    }
    Ok(acc)
}

/// `R̄(ζ;q) = Σ_{n≥0} (-1;q)_n q^{n(n+1)/2} / (ζq, ζ⁻¹q; q)_n`.
pub fn overpartition_rank<R: Ring>(z: &ZetaPair<R>, order: usize) -> Result<Series<R>> {
    let mut acc = Series::one(order);
    let mut t = Series::one(order);
    let mut n = 1;
    while n * (n + 1) / 2 <= order {
        if n == 1 {
            t = t.scale(&R::from_i64(2));
        } else {
            t.mul_one_minus(&neg_one(), n - 1);
        }
        t = t.shift_up(n);
        t.div_one_minus(&z.z, n);
        t.div_one_minus(&z.zinv, n);
        check_bound(&t, n * (n + 1) / 2)?;
        acc.add_assign(&t)?;
        n += 1;
    }
    Ok(acc)
}

/// `R̄2(ζ;q) = Σ_{n≥0} (-1;q)_{2n} q^n / (ζq², ζ⁻¹q²; q²)_n`.
pub fn overpartition_m2_rank<R: Ring>(z: &ZetaPair<R>, order: usize) -> Result<Series<R>> {
    let mut acc = Series::one(order);
    let mut t = Series::one(order);
    for n in 1..=order {
        if n == 1 {
            t = t.scale(&R::from_i64(2));
        } else {
            t.mul_one_minus(&neg_one(), 2 * n - 2);
        }
        t.mul_one_minus(&neg_one(), 2 * n - 1);
        t = t.shift_up(1);
        if 2 * n <= order {
            t.div_one_minus(&z.z, 2 * n);
            t.div_one_minus(&z.zinv, 2 * n);
        }
        check_bound(&t, n)?;
        acc.add_assign(&t)?;
    }
    Ok(acc)
}

/// `R2(ζ;q) = Σ_{n≥0} (-q;q²)_n q^{n²} / (ζq², ζ⁻¹q²; q²)_n`.
pub fn odd_distinct_m2_rank<R: Ring>(z: &ZetaPair<R>, order: usize) -> Result<Series<R>> {
    let mut acc = Series::one(order);
    let mut t = Series::one(order);
    let mut n = 1;
    while n * n <= order {
        t.mul_one_minus(&neg_one(), 2 * n - 1);
        t = t.shift_up(2 * n - 1);
        if 2 * n <= order {
            t.div_one_minus(&z.z, 2 * n);
            t.div_one_minus(&z.zinv, 2 * n);
        }
        check_bound(&t, n * n)?;
        acc.add_assign(&t)?;
        n += 1;
    }
    Ok(acc)
}

/// `Ū(ζ;q) = Σ_{n≥1} (-ζq, -ζ⁻¹q; q)_{n-1} q^n / (-q;q)_n`; summand `n`
/// starts at `q^n`.
pub fn left_heavy<R: Ring>(z: &ZetaPair<R>, order: usize) -> Result<Series<R>> {
    let (nz, nzi) = z.neg();
    let mut acc = Series::zero(order);
    let mut t = Series::monomial(R::one(), 1, order);
    for n in 1..=order {
        if n > 1 {
            t.mul_one_minus(&nz, n - 1);
            t.mul_one_minus(&nzi, n - 1);
            t = t.shift_up(1);
        }
        t.div_one_minus(&neg_one(), n);
        check_bound(&t, n)?;
        acc.add_assign(&t)?;
    }
    Ok(acc)
}

/// Shared loop for `Ū2` and `U2`: `Σ_{n≥1} (-ζq², -ζ⁻¹q²; q²)_{n-1} q^{2n} / D_n`
/// with `D_n = (-q;q)_{2n}` (`overlined`) or `(-q;q²)_n`.
fn m2_left_heavy_impl<R: Ring>(z: &ZetaPair<R>, order: usize, overlined: bool) -> Result<Series<R>> {
    let (nz, nzi) = z.neg();
    let mut acc = Series::zero(order);
    let mut t = Series::monomial(R::one(), 2, order);
    let mut n = 1;
    while 2 * n <= order {
        if n > 1 {
            t.mul_one_minus(&nz, 2 * n - 2);
            t.mul_one_minus(&nzi, 2 * n - 2);
            t = t.shift_up(2);
        }
        t.div_one_minus(&neg_one(), 2 * n - 1);
        if overlined {
            t.div_one_minus(&neg_one(), 2 * n);
        }
        check_bound(&t, 2 * n)?;
        acc.add_assign(&t)?;
        n += 1;
    }
    Ok(acc)
}

/// `Ū2(ζ;q) = Σ_{n≥1} (-ζq², -ζ⁻¹q²; q²)_{n-1} q^{2n} / (-q;q)_{2n}`.
pub fn m2_left_heavy_overlined<R: Ring>(z: &ZetaPair<R>, order: usize) -> Result<Series<R>> {
    m2_left_heavy_impl(z, order, true)
}

/// `U2(ζ;q) = Σ_{n≥1} (-ζq², -ζ⁻¹q²; q²)_{n-1} q^{2n} / (-q;q²)_n`.
pub fn m2_left_heavy<R: Ring>(z: &ZetaPair<R>, order: usize) -> Result<Series<R>> {
    m2_left_heavy_impl(z, order, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &Series<BigInt>) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn partition_numbers() {
        assert_eq!(ints(&partitions(10)), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn strongly_unimodal_counts() {
        // u(n): 0, 1, 1, 3, 4, 6, 10, 15, 21, 30
        let u = strongly_unimodal(&ZetaPair::unit(), 9).unwrap();
        assert_eq!(ints(&u), vec![0, 1, 1, 3, 4, 6, 10, 15, 21, 30]);
    }

    #[test]
    fn zeta_one_matches_summed_refinement() {
        let n = 30;
        let zf = ZetaPair::formal();
        let z1 = ZetaPair::unit();
        assert_eq!(left_heavy(&zf, n).unwrap().at_zeta_one(), left_heavy(&z1, n).unwrap());
        assert_eq!(m2_left_heavy(&zf, n).unwrap().at_zeta_one(), m2_left_heavy(&z1, n).unwrap());
        assert_eq!(
            m2_left_heavy_overlined(&zf, n).unwrap().at_zeta_one(),
            m2_left_heavy_overlined(&z1, n).unwrap()
        );
        assert_eq!(partition_rank(&zf, n).unwrap().at_zeta_one(), partitions::<BigInt>(n));
    }

    #[test]
    fn worked_examples() {
        let ub = left_heavy(&ZetaPair::unit(), 10).unwrap();
        assert_eq!(ub.coefficient(3).unwrap(), &BigInt::from(3));
        let u2b = m2_left_heavy_overlined(&ZetaPair::unit(), 10).unwrap().negate_q();
        assert_eq!(u2b.coefficient(7).unwrap(), &BigInt::from(5));
        let u2 = m2_left_heavy(&ZetaPair::unit(), 10).unwrap().negate_q();
        assert_eq!(u2.coefficient(6).unwrap(), &BigInt::from(5));
    }

    #[test]
    fn rank_zero_of_three() {
        let u = strongly_unimodal(&ZetaPair::formal(), 5).unwrap();
        assert_eq!(u.zeta_coefficient(0, 3).unwrap(), BigInt::from(1));
    }
}
