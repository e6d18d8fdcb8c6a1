//! The classical transformations (Heine, Watson, two Andrews–Berndt
//! identities) at monomial parameter values.
//!
//! Every lemma is generic over the coefficient ring and the base `Q = q^step`.
//! Each function returns both sides expanded through `q^top`. An optional
//! `clear` scalar multiplies every term on both sides, which lets a caller
//! cancel constant Pochhammer factors such as `(ζ;q)_n` exactly.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::laurent::QLaurent;
use crate::product::{sum_unilateral, FactorProduct, Monomial};
use crate::ring::Ring;

type M<R> = Monomial<R>;
type FP<R> = FactorProduct<R>;

/// One parameter assignment for a classical lemma; `None` marks the
/// documented limit value (only Watson's `c → ∞` uses it).
#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalSpec<R> {
    pub step: i64,
    pub params: Vec<Option<Monomial<R>>>,
}

impl<R: Ring> ClassicalSpec<R> {
    pub fn new(step: i64, params: Vec<Option<Monomial<R>>>) -> Self {
        ClassicalSpec { step, params }
    }

    fn get(&self, i: usize) -> Result<M<R>> {
        self.params
            .get(i)
            .cloned()
            .flatten()
            .ok_or_else(|| Error::UnsupportedSpecialization(format!("parameter {i} must be a monomial")))
    }
}

/// Both sides of a lemma.
pub type Sides<R> = (QLaurent<R>, QLaurent<R>);

fn div<R: Ring>(a: &M<R>, b: &M<R>) -> Result<M<R>> {
    a.div(b)
}

fn inv<R: Ring>(a: &M<R>) -> Result<M<R>> {
    M::constant(R::one()).div(a)
}

/// Sums `term(n)` for `n >= start`, scanning at least `top + 8` terms before
/// trusting the term orders to increase.
fn series_sum<R: Ring>(top: i64, start: i64, term: impl FnMut(i64) -> Result<FP<R>>) -> Result<QLaurent<R>> {
    sum_unilateral(top, start, start + top.max(0) + 8, term)
}

/// Heine: parameters `(a, b, c, t)`.
///
/// `Σ (a,b;Q)_n t^n/(c,Q;Q)_n = (b,at;Q)_∞/(c,t;Q)_∞ Σ (c/b,t;Q)_n b^n/(at,Q;Q)_n`
pub fn heine<R: Ring>(spec: &ClassicalSpec<R>, clear: &R, top: i64) -> Result<Sides<R>> {
    let s = spec.step;
    let (a, b, c, t) = (spec.get(0)?, spec.get(1)?, spec.get(2)?, spec.get(3)?);
    let q = M::q(s);
    let at = a.mul(&t);
    let cb = div(&c, &b)?;
    let lhs = series_sum(top, 0, |n| {
        Ok(FP::scalar(clear.clone())
            .poch_n(&a, s, n)
            .poch_n(&b, s, n)
            .times(&t.pow(n)?)
            .inv_poch_n(&c, s, n)
            .inv_poch_n(&q, s, n))
    })?;
    let pre = FP::scalar(clear.clone()).poch_inf(&b, s).poch_inf(&at, s).inv_poch_inf(&c, s).inv_poch_inf(&t, s);
    let sum = series_sum(top, 0, |n| {
        Ok(pre
            .clone()
            .poch_n(&cb, s, n)
            .poch_n(&t, s, n)
            .times(&b.pow(n)?)
            .inv_poch_n(&at, s, n)
            .inv_poch_n(&q, s, n))
    })?;
    Ok((lhs, sum))
}

/// Watson: parameters `(a, b, c, d, e)`; `c = None` is the limit `c → ∞`.
///
/// The very-well-poised factor `(√a Q, -√a Q;Q)_n / (√a, -√a;Q)_n` is used in
/// its closed form `(1 - a Q^{2n}) / (1 - a)`.
pub fn watson<R: Ring>(spec: &ClassicalSpec<R>, clear: &R, top: i64) -> Result<Sides<R>> {
    let s = spec.step;
    let (a, b, d, e) = (spec.get(0)?, spec.get(1)?, spec.get(3)?, spec.get(4)?);
    let c = spec.params.get(2).cloned().flatten();
    let q = M::q(s);
    let aq = a.mul(&q);
    let aqb = div(&aq, &b)?;
    let aqd = div(&aq, &d)?;
    let aqe = div(&aq, &e)?;
    let de = d.mul(&e);
    let aqde = div(&aq, &de)?;
    let (aqbc, aqc) = match &c {
        Some(c) => (Some(div(&aqb, c)?), Some(div(&aq, c)?)),
        None => (None, None),
    };
    let lhs = series_sum(top, 0, |n| {
        let mut t = FP::scalar(clear.clone()).poch_n(&d, s, n).poch_n(&e, s, n).times(&aqde.pow(n)?);
        t = t.inv_poch_n(&q, s, n).inv_poch_n(&aqb, s, n);
        if let (Some(x), Some(y)) = (&aqbc, &aqc) {
            t = t.poch_n(x, s, n).inv_poch_n(y, s, n);
        }
        Ok(t)
    })?;
    let pre = FP::scalar(clear.clone())
        .poch_inf(&aqd, s)
        .poch_inf(&aqe, s)
        .inv_poch_inf(&aq, s)
        .inv_poch_inf(&aqde, s);
    let rhs = series_sum(top, 0, |n| {
        let mut t = pre
            .clone()
            .poch_n(&a, s, n)
            .poch_n(&b, s, n)
            .poch_n(&d, s, n)
            .poch_n(&e, s, n)
            .binomial(&a.shift(2 * s * n), 1)
            .binomial(&a, -1)
            .times(&aq.pow(2 * n)?)
            .inv_poch_n(&q, s, n)
            .inv_poch_n(&aqb, s, n)
            .inv_poch_n(&aqd, s, n)
            .inv_poch_n(&aqe, s, n);
        match (&c, &aqc) {
            (Some(c), Some(aqc)) => {
                let sign = if n % 2 == 0 { R::one() } else { R::from_i64(-1) };
                t = t
                    .poch_n(c, s, n)
                    .inv_poch_n(aqc, s, n)
                    .times(&M::new(sign, s * n * (n - 1) / 2))
                    .times(&b.mul(c).mul(&de).pow(-n)?);
            }
            // (c;Q)_n c^{-n} → (-1)^n Q^{n(n-1)/2}, which cancels the sign
            _ => {
                t = t.times_q(s * n * (n - 1)).times(&b.mul(&de).pow(-n)?);
            }
        }
        Ok(t)
    })?;
    Ok((lhs, rhs))
}

/// Andrews–Berndt Theorem 6.2.1: parameters `(a, b, A, B)`.
pub fn ab621<R: Ring>(spec: &ClassicalSpec<R>, clear: &R, top: i64) -> Result<Sides<R>> {
    let s = spec.step;
    let (a, b, big_a, big_b) = (spec.get(0)?, spec.get(1)?, spec.get(2)?, spec.get(3)?);
    let q = M::q(s);
    let m_abq = big_a.mul(&b).mul(&q).neg();
    let m_aq = a.mul(&q).neg();
    let m_bq = b.mul(&q).neg();
    let lhs = series_sum(top, 0, |n| {
        Ok(FP::scalar(clear.clone())
            .poch_n(&big_b, s, n)
            .poch_n(&m_abq, s, n)
            .times_q(s * n)
            .inv_poch_n(&m_aq, s, n)
            .inv_poch_n(&m_bq, s, n))
    })?;
    let a_inv = inv(&a)?;
    let big_a_inv = inv(&big_a)?;
    let abq_a = div(&big_a.mul(&b).mul(&q), &a)?;
    let m_b_a = div(&big_b, &a)?.neg();
    let pre1 = FP::scalar(clear.clone())
        .times(&a_inv.neg())
        .poch_inf(&big_b, s)
        .poch_inf(&m_abq, s)
        .inv_poch_inf(&m_aq, s)
        .inv_poch_inf(&m_bq, s);
    let first = series_sum(top, 0, |n| {
        Ok(pre1
            .clone()
            .poch_n(&big_a_inv, s, n)
            .times(&abq_a.pow(n)?)
            .inv_poch_n(&m_b_a, s, n + 1))
    })?;
    let m_a_inv = a_inv.neg();
    let m_abq_a = div(&big_a.mul(&big_b).mul(&q), &a)?.neg();
    let pre2 = FP::scalar(clear.clone()).binomial(&b.neg(), 1);
    let second = series_sum(top, 0, |n| {
        Ok(pre2
            .clone()
            .poch_n(&m_a_inv, s, n + 1)
            .poch_n(&m_abq_a, s, n)
            .times(&b.neg().pow(n)?)
            .inv_poch_n(&m_b_a, s, n + 1)
            .inv_poch_n(&abq_a, s, n + 1))
    })?;
    Ok((lhs, first.add(&second)))
}

/// Andrews–Berndt entry 6.3.12: parameters `(a, b, c)`.
pub fn ab6312<R: Ring>(spec: &ClassicalSpec<R>, clear: &R, top: i64) -> Result<Sides<R>> {
    let s = spec.step;
    let (a, b, c) = (spec.get(0)?, spec.get(1)?, spec.get(2)?);
    let q = M::q(s);
    let m_aq = a.mul(&q).neg();
    let m_bq = b.mul(&q).neg();
    let m_cq = c.mul(&q).neg();
    let lhs = series_sum(top, 0, |n| {
        Ok(FP::scalar(clear.clone())
            .poch_n(&m_aq, s, n)
            .poch_n(&m_bq, s, n)
            .times_q(s * (n + 1))
            .inv_poch_n(&m_cq, s, n))
    })?;
    let m_c_inv = inv(&c)?.neg();
    let ab_c = div(&a.mul(&b), &c)?;
    let ab_c2 = div(&ab_c, &c)?;
    let aq_c = div(&a.mul(&q), &c)?;
    let bq_c = div(&b.mul(&q), &c)?;
    let first = series_sum(top, 1, |n| {
        Ok(FP::scalar(clear.clone())
            .poch_n(&m_c_inv, s, n)
            .times(&ab_c.pow(n - 1)?)
            .times_q(s * n * (n + 1) / 2)
            .inv_poch_n(&aq_c, s, n)
            .inv_poch_n(&bq_c, s, n))
    })?;
    let pre = FP::scalar(clear.clone())
        .times(&inv(&c)?.neg())
        .poch_inf(&m_aq, s)
        .poch_inf(&m_bq, s)
        .inv_poch_inf(&m_cq, s);
    let second = series_sum(top, 1, |n| {
        Ok(pre
            .clone()
            .times(&ab_c2.pow(n - 1)?)
            .times_q(s * n * n)
            .inv_poch_n(&aq_c, s, n)
            .inv_poch_n(&bq_c, s, n))
    })?;
    Ok((lhs, first.add(&second)))
}

/// `c q^k` with rational `c = num/den`.
pub fn rq(num: i64, den: i64, k: i64) -> Option<Monomial<BigRational>> {
    Some(Monomial::new(BigRational::new(BigInt::from(num), BigInt::from(den)), k))
}

/// Generic rational specializations used when no list is supplied.
pub fn default_specializations(key: &str) -> Vec<ClassicalSpec<BigRational>> {
    let spec = |step, params: Vec<Option<Monomial<BigRational>>>| ClassicalSpec::new(step, params);
    match key {
        "heine" => vec![
            spec(1, vec![rq(1, 1, 1), rq(1, 1, 2), rq(1, 1, 3), rq(1, 1, 2)]),
            spec(1, vec![rq(1, 2, 0), rq(1, 3, 1), rq(2, 1, 1), rq(1, 1, 1)]),
            spec(1, vec![rq(3, 1, 1), rq(-1, 2, 1), rq(1, 5, 0), rq(2, 3, 2)]),
            spec(2, vec![rq(1, 1, 1), rq(-2, 1, 3), rq(1, 2, 1), rq(1, 1, 1)]),
            spec(1, vec![rq(-1, 1, 0), rq(1, 1, 1), rq(1, 3, 2), rq(-1, 1, 1)]),
            spec(3, vec![rq(2, 1, 2), rq(1, 4, 1), rq(-1, 1, 4), rq(1, 2, 2)]),
        ],
        "watson" => vec![
            spec(1, vec![rq(1, 1, 1), rq(1, 2, 0), rq(2, 1, 0), rq(1, 3, 0), rq(-1, 1, 0)]),
            spec(1, vec![rq(1, 1, 2), rq(-1, 2, 1), rq(3, 1, 0), rq(1, 1, 1), rq(2, 1, 0)]),
            spec(2, vec![rq(1, 1, 2), rq(1, 1, 1), rq(-1, 1, 1), rq(1, 3, 1), rq(-1, 2, 0)]),
            spec(1, vec![rq(1, 2, 1), rq(1, 1, 1), None, rq(-1, 1, 0), rq(2, 1, 1)]),
            spec(2, vec![rq(1, 1, 2), rq(-1, 1, 1), None, rq(1, 3, 1), rq(-1, 1, 1)]),
            spec(1, vec![rq(2, 1, 1), rq(1, 3, 1), rq(-2, 1, 1), rq(1, 2, 0), rq(1, 1, 1)]),
        ],
        "ab621" => vec![
            spec(1, vec![rq(1, 1, 0), rq(1, 1, 1), rq(1, 2, 0), rq(1, 3, 0)]),
            spec(1, vec![rq(-2, 1, 0), rq(1, 2, 1), rq(3, 1, 1), rq(1, 1, 1)]),
            spec(2, vec![rq(-1, 1, 1), rq(1, 1, 2), rq(1, 1, -2), rq(-1, 1, 2)]),
            spec(1, vec![rq(2, 1, 1), rq(-1, 3, 1), rq(1, 5, 1), rq(2, 1, 0)]),
            spec(1, vec![rq(1, 3, 0), rq(1, 1, 2), rq(-1, 1, 0), rq(1, 1, 1)]),
            spec(3, vec![rq(1, 1, 1), rq(-1, 2, 1), rq(2, 1, 0), rq(-1, 4, 2)]),
        ],
        "ab6312" => vec![
            spec(1, vec![rq(1, 2, 0), rq(1, 3, 0), rq(1, 1, 1)]),
            spec(1, vec![rq(2, 1, 1), rq(-1, 1, 0), rq(3, 1, 0)]),
            spec(2, vec![rq(1, 1, 1), rq(1, 1, -1), rq(-1, 2, 1)]),
            spec(1, vec![rq(-3, 1, 0), rq(1, 2, 1), rq(1, 2, 0)]),
            spec(1, vec![rq(1, 1, 2), rq(2, 1, 0), rq(-2, 1, 1)]),
            spec(2, vec![rq(1, 3, 1), rq(1, 1, 0), rq(2, 1, 2)]),
        ],
        _ => Vec::new(),
    }
}

/// Evaluates lemma `key` at `spec`.
pub fn sides<R: Ring>(key: &str, spec: &ClassicalSpec<R>, clear: &R, top: i64) -> Result<Sides<R>> {
    match key {
        "heine" => heine(spec, clear, top),
        "watson" => watson(spec, clear, top),
        "ab621" => ab621(spec, clear, top),
        "ab6312" => ab6312(spec, clear, top),
        _ => Err(Error::UnknownIdentity(key.to_string())),
    }
}

/// True for errors that mean "this specialization hits a singular factor".
pub fn is_singular(e: &Error) -> bool {
    matches!(
        e,
        Error::SingularPochhammer(_) | Error::NotInvertible | Error::InexactDivision(_) | Error::UnsupportedSpecialization(_)
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn agree(key: &str, spec: &ClassicalSpec<BigRational>) {
        let (l, r) = sides(key, spec, &BigRational::one(), 25).unwrap();
        for e in -5..=25 {
            assert_eq!(l.coefficient(e).unwrap(), r.coefficient(e).unwrap(), "{key} {spec:?} at q^{e}");
        }
    }

    #[test]
    fn heine_at_the_worked_specialization() {
        agree("heine", &ClassicalSpec::new(1, vec![rq(1, 1, 1), rq(1, 1, 2), rq(1, 1, 3), rq(1, 1, 2)]));
    }

    #[test]
    fn every_default_specialization_agrees() {
        for key in ["heine", "watson", "ab621", "ab6312"] {
            let specs = default_specializations(key);
            assert!(specs.len() >= 5);
            for s in &specs {
                agree(key, s);
            }
        }
    }

    #[test]
    fn wrong_parameters_disagree() {
        // right-hand side evaluated at a different c
        let spec = ClassicalSpec::new(1, vec![rq(1, 2, 0), rq(1, 3, 1), rq(2, 1, 1), rq(1, 1, 1)]);
        let (l, _) = heine(&spec, &BigRational::one(), 20).unwrap();
        let moved = ClassicalSpec::new(1, vec![rq(1, 2, 0), rq(1, 3, 1), rq(3, 1, 1), rq(1, 1, 1)]);
        let (_, r) = heine(&moved, &BigRational::one(), 20).unwrap();
        assert_ne!(l.to_series(20).unwrap(), r.to_series(20).unwrap());
    }
}
