//! Per-entry recipes: each builds both sides of every check through the
//! requested order.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::bailey::{apply_bailey_lemma, defining_relation_mismatch, lovejoy_pair, mod2_pair, unit_pair};
use super::classical::{self, default_specializations, rq, ClassicalSpec};
use super::Check;
use crate::error::{Error, Result};
use crate::gf::bilateral::BilateralSpec;
use crate::gf::jacobi::{appell, appell_cleared, eta, mu_scaled, theta_product, theta_reduced, theta_sum, JacobiArg};
use crate::gf::rank::{self, ZetaPair};
use crate::gf::{build_series, NamedSeriesKey};
use crate::laurent::QLaurent;
use crate::prefixed::PrefixedSeries;
use crate::product::{sum_unilateral, FactorProduct, Monomial};
use crate::ring::{Mod2, Ring};
use crate::series::Series;
use crate::zeta::ZetaLaurent;

type ZL = ZetaLaurent;
type L = QLaurent<ZL>;
type FP = FactorProduct<ZL>;

/// Extra precision carried by intermediate products.
const MARGIN: i64 = 8;

pub(super) fn checks(key: &str, order: usize) -> Result<Vec<Check>> {
    let top = order as i64 + MARGIN;
    match key {
        "eq1.1" => eq1_1(top),
        "eq1.2" => eq1_2(top),
        "lemma3.1" => lemma3_1(top),
        "cor3.2" => cor3_2(top),
        "prop4.1" => prop4_1(top),
        "cor4.2" => cor4_2(top),
        "false-dual" => false_dual(top),
        "prop5.1" => prop5_1(top),
        "cor5.2" => cor5_2(top),
        "prop5.3-mod2" => prop5_3_mod2(top),
        "thetid" => thetid(top).map(|(l, r)| vec![Check::z("double sum", l, r)]),
        "prop5.4" => prop5_4(top),
        "omega" => omega(top),
        "jtp" => jtp(top),
        "heine" | "watson" | "ab621" | "ab6312" => classical_checks(key, top),
        "bailey-lemma" => bailey_lemma(top),
        "lovejoy-bp" => lovejoy_bp(top),
        _ => Err(Error::UnknownIdentity(key.to_string())),
    }
}

fn z(c: i64, m: i64) -> ZL {
    ZL::monomial(c, m)
}

fn zl(terms: &[(i64, i64)]) -> ZL {
    ZL::from_terms(terms.iter().copied())
}

fn zm(c: i64, m: i64, k: i64) -> Monomial<ZL> {
    Monomial::new(z(c, m), k)
}

fn named(key: NamedSeriesKey, top: i64) -> Result<L> {
    Ok(QLaurent::from_series(build_series(key, top as usize)?))
}

fn series(s: Series<ZL>) -> L {
    QLaurent::from_series(s)
}

fn sum(top: i64, start: i64, term: impl FnMut(i64) -> Result<FP>) -> Result<L> {
    sum_unilateral(top, start, start + top.max(0) + 8, term)
}

fn constant(c: ZL, top: i64) -> PrefixedSeries {
    PrefixedSeries::from_series(Series::constant(c, top as usize))
}

fn arg(eps: i64, a: i64, b: i64) -> JacobiArg {
    JacobiArg::new(eps, a, b)
}

/// `q^{n²}/(ζq, ζ⁻¹q; q)_{-n} = (ζ, ζ⁻¹; q)_n q^n`
fn eq1_1(top: i64) -> Result<Vec<Check>> {
    (1..=8)
        .map(|n| {
            let lhs = FP::one().times_q(n * n).inv_poch_n(&zm(1, 1, 1), 1, -n).inv_poch_n(&zm(1, -1, 1), 1, -n);
            let rhs = FP::one().times_q(n).poch_n(&zm(1, 1, 0), 1, n).poch_n(&zm(1, -1, 0), 1, n);
            Ok(Check::z(format!("n = {n}"), lhs.expand(top)?, rhs.expand(top)?))
        })
        .collect()
}

/// `(1+ζ)(1+ζ⁻¹) U(ζ;q) = -R(-ζ;q) + (1+ζ⁻¹)/(q;q)_∞ Σ ζ^n q^{n(n+1)/2}/(1+ζ⁻¹q^n)`
fn eq1_2(top: i64) -> Result<Vec<Check>> {
    let lhs = named(NamedSeriesKey::Uzeta, top)?.scale(&zl(&[(-1, 1), (0, 2), (1, 1)]));
    let lambert = BilateralSpec {
        alternating: false,
        quad2: 1,
        lin2: 1,
        zeta_step: 1,
        pole_sign: -1,
        pole_zeta: -1,
        pole_step: 1,
        pole_shift: 0,
    };
    let cleared = lambert.expand_cleared_laurent(top)?;
    let p = named(NamedSeriesKey::P, top)?;
    let r = series(build_series(NamedSeriesKey::R, top as usize)?.negate_zeta());
    Ok(vec![Check::z("bilateral form", lhs, cleared.mul(&p).sub(&r))])
}

/// `(1-ζ)(1-ζ⁻¹) Ū(ζ;q) = R̄(ζ;q) - (-ζq,-ζ⁻¹q;q)_∞/(-q;q)_∞ R(ζ;q)`
fn lemma3_1(top: i64) -> Result<Vec<Check>> {
    let lhs = named(NamedSeriesKey::Ubar, top)?.scale(&zl(&[(-1, -1), (0, 2), (1, -1)]));
    let pre = FP::one().poch_inf(&zm(-1, 1, 1), 1).poch_inf(&zm(-1, -1, 1), 1).inv_poch_inf(&zm(-1, 0, 1), 1).expand(top)?;
    let rhs = named(NamedSeriesKey::Rbar, top)?.sub(&pre.mul(&named(NamedSeriesKey::R, top)?));
    Ok(vec![Check::z("rank form", lhs, rhs)])
}

/// `(1-ζ)(1-ζ²) Ū(ζ;q)` against the Appell-function form; both `A_2(z, 1/2)`
/// and `A_3(z, -τ)` carry the pole `1 - ζ`, absorbed by the clearing factor.
fn cor3_2(top: i64) -> Result<Vec<Check>> {
    let lhs = named(NamedSeriesKey::Ubar, top)?.scale(&zl(&[(0, 1), (1, -1), (2, -1), (3, 1)]));
    let eta1 = eta(1, top)?;
    let eta2 = eta(2, top)?;
    let a2 = appell_cleared(2, arg(1, 0, 0), arg(0, 0, 1), 1, top)?;
    let a3 = appell_cleared(3, arg(1, 0, 0), arg(0, -1, 0), 1, top)?;
    let t1 = eta2.mul(&a2).div(&eta1.pow(2))?.scale(&z(-2, 1));
    let t2 = theta_product(arg(1, 0, 1), 1, top)?.mul(&a3).div(&eta1.mul(&eta2))?.neg();
    let t3 = constant(zl(&[(1, -1), (2, 1)]), top);
    let rhs = PrefixedSeries::sum([&t1, &t2, &t3])?;
    Ok(vec![Check::p("Appell form", PrefixedSeries::from_series(lhs.to_series(top as usize)?), rhs)])
}

/// `2(1-ζ²) Ū2(ζ;-q)` against three generalized Lambert series.
fn prop4_1(top: i64) -> Result<Vec<Check>> {
    let lhs = named(NamedSeriesKey::Ubar2Neg, top)?.scale(&zl(&[(0, 2), (2, -2)]));
    let work = top + 4;
    let s1 = BilateralSpec::example().expand_laurent(work)?;
    let pole = |quad2, lin2| BilateralSpec {
        alternating: false,
        quad2,
        lin2,
        zeta_step: 0,
        pole_sign: -1,
        pole_zeta: 1,
        pole_step: 2,
        pole_shift: 1,
    };
    let s2 = pole(2, 6).expand_laurent(work)?;
    let s3 = pole(2, 2).expand_laurent(work)?;
    let pre1 = FP::scalar(zl(&[(1, -2), (2, -2)]))
        .times_q(1)
        .poch_inf(&zm(-1, 1, 2), 2)
        .poch_inf(&zm(-1, -1, 2), 2)
        .poch_inf(&zm(-1, 0, 1), 2)
        .inv_poch_inf(&zm(1, 0, 1), 1)
        .inv_poch_inf(&zm(-1, 0, 2), 2)
        .expand(work)?;
    let theta = FP::one().poch_inf(&zm(1, 0, 2), 4).inv_poch_inf(&zm(1, 0, 4), 4).expand(work)?;
    let rhs = pre1
        .mul(&s1)
        .add(&theta.mul(&s2).shift(1).scale(&z(1, 2)))
        .sub(&theta.mul(&s3).scale(&z(1, 1)));
    Ok(vec![Check::z("Lambert form", lhs, rhs)])
}

/// `(1-ζ²) Ū2(ζ;-q)` against the μ and `A_2` form.
fn cor4_2(top: i64) -> Result<Vec<Check>> {
    let lhs = named(NamedSeriesKey::Ubar2Neg, top)?.scale(&zl(&[(0, 1), (2, -1)]));
    let eta1 = eta(1, top)?;
    let eta2 = eta(2, top)?;
    let eta4 = eta(4, top)?;
    let a2 = appell(2, arg(1, 1, 1), arg(0, 1, 1), 2, top)?;
    let t1 = eta2
        .pow(2)
        .mul(&theta_product(arg(1, 0, 1), 2, top)?)
        .mul(&a2)
        .div(&eta1.pow(2).mul(&eta4.pow(2)))?
        .times_prefix(0, 1, 0)
        .neg();
    let (c, two_mu) = mu_scaled(arg(1, 1, 1), arg(0, 0, 1), 2, top)?;
    if c != ZL::constant(2) {
        return Err(Error::Domain(format!("unexpected theta constant {c}")));
    }
    let t2 = two_mu.times_prefix(1, 1, -6).neg();
    let t3 = constant(z(1, 1), top);
    let rhs = PrefixedSeries::sum([&t1, &t2, &t3])?;
    Ok(vec![Check::p("mu form", PrefixedSeries::from_series(lhs.to_series(top as usize)?), rhs)])
}

/// Summands of `Ū2(ζ;-q⁻¹)` via `(w;q^{-1})_n`, the false theta evaluation,
/// and its `ζ = 1` case.
fn false_dual(top: i64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    // (w;q⁻¹)_n = (w⁻¹;q)_n (-1)^n w^n q^{-n(n-1)/2}
    for (c, m, k) in [(1, 1, 1), (-1, -1, 2), (1, 0, 3), (-1, 1, -1)] {
        let w = zm(c, m, k);
        let w_inv = Monomial::constant(ZL::one()).div(&w)?;
        for n in 1..=6 {
            let mut lhs = FP::one();
            for j in 0..n {
                lhs = lhs.binomial(&w.shift(-j), 1);
            }
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let rhs = FP::scalar(ZL::constant(sign)).poch_n(&w_inv, 1, n).times(&w.pow(n)?).times_q(-n * (n - 1) / 2);
            out.push(Check::z(format!("(w;1/q)_n, w = {c} zeta^{m} q^{k}, n = {n}"), lhs.expand(top)?, rhs.expand(top)?));
        }
    }
    let middle = |n: i64, zp: (ZL, ZL)| -> FP {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        FP::scalar(ZL::constant(sign))
            .poch_n(&Monomial::new(zp.0.negated(), 2), 2, n - 1)
            .poch_n(&Monomial::new(zp.1.negated(), 2), 2, n - 1)
            .times_q(n)
            .inv_poch_n(&zm(1, 0, 1), 2, n)
            .inv_poch_n(&zm(-1, 0, 2), 2, n)
    };
    let formal = || (z(1, 1), z(1, -1));
    // summand n of Ū2(ζ;q) at q ↦ -1/q
    for n in 1..=8 {
        let mut dual = FP::one().times_q(-2 * n);
        for k in 1..n {
            dual = dual.binomial(&zm(-1, 1, -2 * k), 1).binomial(&zm(-1, -1, -2 * k), 1);
        }
        for k in 1..=2 * n {
            let sign = if k % 2 == 0 { -1 } else { 1 };
            dual = dual.binomial(&zm(sign, 0, -k), -1);
        }
        out.push(Check::z(format!("summand n = {n}"), dual.expand(top)?, middle(n, formal()).expand(top)?));
    }
    let total = sum(top, 1, |n| Ok(middle(n, formal())))?;
    let lhs = total.scale(&zl(&[(0, 1), (2, -1)]));
    let mut rhs = Series::zero(top as usize);
    for n in (1..).take_while(|n| n * n <= top) {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        rhs.add_at((n * n) as usize, &zl(&[(1 - n, sign), (1 + n, -sign)]));
    }
    out.push(Check::z("false theta", lhs, series(rhs)));
    let at_one = sum(top, 1, |n| Ok(middle(n, (ZL::one(), ZL::one()))))?;
    let mut false_theta = Series::zero(top as usize);
    for n in (1..).take_while(|n| n * n <= top) {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        false_theta.add_at((n * n) as usize, &ZL::constant(sign * n));
    }
    out.push(Check::z("zeta = 1", at_one, series(false_theta)));
    Ok(out)
}

/// `R(-ζq; q²) = Σ q^{2n²}/(-ζq³, -ζ⁻¹q; q²)_n`
fn r_shifted(c: i64, top: i64) -> Result<L> {
    sum(top, 0, |n| Ok(FP::one().times_q(2 * n * n).inv_poch_n(&zm(-c, 1, 3), 2, n).inv_poch_n(&zm(-c, -1, 1), 2, n)))
}

/// `(1+ζ)(1+ζ⁻¹) U2(ζ;-q)` against `R2`, `R` and two products.
fn prop5_1(top: i64) -> Result<Vec<Check>> {
    let lhs = named(NamedSeriesKey::U2Neg, top)?.scale(&zl(&[(-1, 1), (0, 2), (1, 1)]));
    let r2 = series(rank::odd_distinct_m2_rank(&ZetaPair::formal_negated(), top as usize)?.negate_q());
    let cross = FP::scalar(z(1, -1)).poch_inf(&zm(-1, 1, 0), 2).poch_inf(&zm(-1, -1, 0), 2).inv_poch_inf(&zm(1, 0, 1), 2);
    let t2 = cross.clone().binomial(&zm(-1, 1, 1), -1).expand(top)?.mul(&r_shifted(1, top)?);
    let t3 = FP::one()
        .poch_inf(&zm(1, 0, 1), 1)
        .poch_inf(&zm(1, 0, 1), 2)
        .poch_inf(&zm(1, 0, 1), 2)
        .inv_poch_inf(&zm(-1, 1, 1), 1)
        .inv_poch_inf(&zm(-1, -1, 1), 1)
        .expand(top)?;
    let t4 = cross.expand(top)?;
    let rhs = r2.neg().sub(&t2).add(&t3).add(&t4);
    Ok(vec![Check::z("rank form", lhs, rhs)])
}

/// `(1+ζ)² U2(ζ;-q)` against the Appell-function form. `A_2(z+1/2, -τ; 2τ)`
/// has the pole `1 + ζ`, absorbed by one clearing factor; the same factor
/// divides `ϑ(z+1/2; τ)` exactly.
fn cor5_2(top: i64) -> Result<Vec<Check>> {
    let one_plus = zl(&[(0, 1), (1, 1)]);
    let lhs = named(NamedSeriesKey::U2Neg, top)?.scale(&one_plus.times(&one_plus));
    let eta1 = eta(1, top)?;
    let eta2 = eta(2, top)?;
    let theta2 = theta_product(arg(1, 0, 1), 2, top)?;
    let a2 = appell_cleared(2, arg(1, 0, 1), arg(0, -1, 0), 2, top)?;
    let t1 = eta1.mul(&a2).div(&eta2.pow(2))?.times_prefix(0, 0, 3);
    let a3 = appell(3, arg(1, 1, 1), arg(0, -2, 0), 2, top)?;
    let t2 = theta2.mul(&a3).div(&eta1.mul(&eta2))?.scale(&one_plus).times_prefix(1, -4, -39);
    let t3 = eta1.pow(4).div(&eta2.pow(2).mul(&theta_reduced(arg(1, 0, 1), 1, top)?))?.times_prefix(0, 1, 3).neg();
    let t4 = theta2.div(&eta1)?.scale(&one_plus).times_prefix(0, -1, -5).neg();
    let rhs = PrefixedSeries::sum([&t1, &t2, &t3, &t4])?;
    Ok(vec![Check::p("Appell form", PrefixedSeries::from_series(lhs.to_series(top as usize)?), rhs)])
}

/// `Σ_{n≥0, 0≤j≤n} (1 + q^{2j+1}) q^{3n²+6n-2j²-3j+2}` over any ring.
fn mod2_double_sum<R: Ring>(top: i64) -> Series<R> {
    let mut s = Series::zero(top.max(0) as usize);
    for n in (0..).take_while(|n| n * n + 3 * n + 2 <= top) {
        for j in 0..=n {
            let e = 3 * n * n + 6 * n - 2 * j * j - 3 * j + 2;
            for k in [e, e + 2 * j + 1] {
                if k <= top {
                    s.add_at(k as usize, &R::one());
                }
            }
        }
    }
    s
}

fn prop5_3_mod2(top: i64) -> Result<Vec<Check>> {
    let lhs = build_series(NamedSeriesKey::U2Neg, top as usize)?.at_zeta_one().reduce_mod2();
    let rhs = mod2_double_sum::<Mod2>(top);
    Ok(vec![Check::m("mod 2", QLaurent::from_series(lhs), QLaurent::from_series(rhs))])
}

/// Both sides of the double-sum identity obtained from Bailey's lemma.
pub(super) fn thetid(top: i64) -> Result<(L, L)> {
    let lhs = sum(top, 0, |n| {
        Ok(FP::one().poch_n(&zm(1, 0, 2), 2, n).poch_n(&zm(1, 0, 2), 2, n).times_q(2 * n).inv_poch_n(&zm(1, 0, 3), 2, n))
    })?;
    let mut rhs = QLaurent::zero_through(top);
    for n in (0..).take_while(|n| n * n + 3 * n <= top) {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        for j in 0..=n {
            let t = FP::scalar(ZL::constant(sign))
                .binomial(&zm(1, 0, 1), 1)
                .binomial(&zm(-1, 0, 2 * n + 2), 1)
                .binomial(&zm(-1, 0, 2 * j + 1), 1)
                .times_q(3 * n * n + 6 * n - 2 * j * j - 3 * j)
                .binomial(&zm(1, 0, 2 * n + 2), -1);
            rhs = rhs.add(&t.expand(top)?);
        }
    }
    Ok((lhs, rhs))
}

/// Twice the double sum against the count of `(N, J)` with `N ≥ 3`,
/// `N ≡ 2 (mod 4)`, `J` odd, `-N/3 < J ≤ N/3` at exponent `(N² - 6J² + 2)/16`.
fn prop5_4(top: i64) -> Result<Vec<Check>> {
    let double: Series<ZL> = mod2_double_sum(top);
    let mut intermediate = Series::zero(top as usize);
    for n in (1..).take_while(|n| n * n <= 3 * top + 3) {
        for j in (-n..=n).filter(|j| 3 * j.abs() <= n) {
            let e = n * n + n - 6 * j * j - 3 * j;
            if (0..=top).contains(&e) {
                intermediate.add_at(e as usize, &ZL::one());
            }
        }
    }
    let mut count = Series::zero(top as usize);
    let n_max = ((3 * (16 * top - 2)) as f64).sqrt() as i64 + 2;
    for big_n in (6..=n_max).step_by(4) {
        for big_j in (-big_n..=big_n).filter(|j| j.rem_euclid(2) == 1 && -big_n < 3 * j && 3 * j <= big_n) {
            let num = big_n * big_n - 6 * big_j * big_j + 2;
            if num % 16 != 0 {
                return Err(Error::Domain(format!("exponent ({num})/16 is not integral")));
            }
            let e = num / 16;
            if e <= top {
                count.add_at(e as usize, &ZL::one());
            }
        }
    }
    Ok(vec![
        Check::z("intermediate form", series(double.clone()), series(intermediate)),
        Check::z("norm-form count", series(double.scale(&ZL::constant(2))), series(count)),
    ])
}

/// `R(-q;q²) = 1 + q - q(1+q) ω(-q)` with `ω(q) = Σ q^{2n(n+1)}/(q;q²)²_{n+1}`.
fn omega(top: i64) -> Result<Vec<Check>> {
    let lhs = sum(top, 0, |n| Ok(FP::one().times_q(2 * n * n).inv_poch_n(&zm(-1, 0, 3), 2, n).inv_poch_n(&zm(-1, 0, 1), 2, n)))?;
    let w = sum(top, 0, |n| Ok(FP::one().times_q(2 * n * (n + 1)).inv_poch_n(&zm(-1, 0, 1), 2, n + 1).inv_poch_n(&zm(-1, 0, 1), 2, n + 1)))?;
    let one_plus_q = FP::one().binomial(&zm(-1, 0, 1), 1).expand(top)?;
    let rhs = one_plus_q.sub(&one_plus_q.mul(&w).shift(1));
    Ok(vec![Check::z("third order omega", lhs, rhs)])
}

fn jtp(top: i64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for s in 1..=3 {
        for x in [arg(1, 0, 0), arg(1, 0, 1), arg(1, 1, 1), arg(-1, 2, 0), arg(2, -1, 1), arg(0, 1, 1)] {
            let label = format!("x = ({}, {}, {}), s = {s}", x.eps, x.a, x.b);
            out.push(Check::p(label, theta_sum(x, s, top)?, theta_product(x, s, top)?));
        }
    }
    Ok(out)
}

/// Specializations used in the unimodal proofs, over ℤ[ζ, ζ⁻¹].
fn unimodal_specializations(key: &str) -> Vec<(ClassicalSpec<ZL>, ZL)> {
    let m = |c, e, k| Some(zm(c, e, k));
    let one = ZL::one();
    match key {
        "heine" => vec![(ClassicalSpec::new(2, vec![m(1, 1, 2), m(1, 0, 2), m(-1, 1, 3), m(-1, -1, 1)]), one)],
        "watson" => vec![
            (ClassicalSpec::new(2, vec![m(1, 0, 2), m(-1, 0, 1), None, m(-1, 1, 1), m(-1, -1, 1)]), one.clone()),
            (ClassicalSpec::new(2, vec![m(1, 0, 2), m(-1, 1, 1), m(-1, -1, 1), m(1, 0, 1), m(-1, 0, 1)]), one),
        ],
        "ab621" => vec![(ClassicalSpec::new(2, vec![m(-1, 0, 1), m(1, 0, 2), m(1, -1, -2), m(-1, 1, 2)]), one)],
        "ab6312" => vec![
            (ClassicalSpec::new(1, vec![m(1, 1, 0), m(1, -1, 0), m(1, 0, 1)]), zl(&[(-1, -1), (0, 2), (1, -1)])),
            (ClassicalSpec::new(2, vec![m(1, 1, 0), m(1, -1, 0), m(-1, 0, 1)]), one),
        ],
        _ => Vec::new(),
    }
}

fn classical_checks(key: &str, top: i64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut valid = 0;
    for (i, spec) in default_specializations(key).iter().enumerate() {
        match classical::sides(key, spec, &BigRational::one(), top) {
            Ok((l, r)) => {
                valid += 1;
                out.push(Check::q(format!("rational specialization {i}"), l, r));
            }
            Err(e) if classical::is_singular(&e) => log::warn!("{key}: skipping specialization {i}: {e}"),
            Err(e) => return Err(e),
        }
    }
    if valid < super::MIN_SPECIALIZATIONS {
        return Err(Error::TooFewSpecializations { found: valid, needed: super::MIN_SPECIALIZATIONS });
    }
    for (i, (spec, clear)) in unimodal_specializations(key).iter().enumerate() {
        let (l, r) = classical::sides(key, spec, clear, top)?;
        out.push(Check::z(format!("unimodal specialization {i}"), l, r));
    }
    Ok(out)
}

fn bailey_lemma(top: i64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let pair = mod2_pair::<ZL>();
    let rho = zm(1, 0, 2);
    let (lhs, rhs) = apply_bailey_lemma(&pair, &rho, &rho, 12, top)?;
    let (t_lhs, t_rhs) = thetid(top)?;
    out.push(Check::z("lemma on the mod-2 pair", lhs.clone(), rhs.clone()));
    out.push(Check::z("left side is the double-sum series", lhs, t_lhs));
    out.push(Check::z("right side is the double sum", rhs, t_rhs));
    let specs = [
        (rq(1, 2, 1), rq(1, 3, 0), rq(2, 1, 0), 1),
        (rq(1, 1, 1), rq(-1, 1, 1), rq(1, 2, 0), 1),
        (rq(2, 1, 2), rq(3, 1, 0), rq(-1, 3, 1), 1),
        (rq(1, 1, 0), rq(1, 1, 1), rq(1, 2, 0), 2),
        (rq(-1, 2, 1), rq(1, 5, 0), rq(1, 1, 1), 1),
        (rq(1, 3, 2), rq(2, 1, 1), rq(-2, 1, 0), 3),
    ];
    for (i, (a, r1, r2, step)) in specs.into_iter().enumerate() {
        let (a, r1, r2) = (a.unwrap(), r1.unwrap(), r2.unwrap());
        let (l, r) = apply_bailey_lemma(&unit_pair(a, step), &r1, &r2, 6, top)?;
        out.push(Check::q(format!("unit pair, specialization {i}"), l, r));
    }
    Ok(out)
}

/// Defining relation of the mod-2 pair for `n ≤ 12`, and of generic
/// rational Lovejoy pairs for `n ≤ 6`.
fn lovejoy_bp(top: i64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut push = |label: String, mismatch: Option<(i64, i64)>| {
        let zero = QLaurent::<ZL>::zero_through(top);
        let rhs = match mismatch {
            None => zero.clone(),
            // a failing relation becomes a mismatch at its q-exponent
            Some((_, e)) => zero.add(&QLaurent::new(e, Series::one((top - e).max(0) as usize))),
        };
        out.push(Check::z(label, zero, rhs));
    };
    push("mod-2 pair, n <= 12".into(), defining_relation_mismatch(&mod2_pair::<BigInt>(), 12, top)?);
    let specs = [
        (rq(1, 1, 1), rq(1, 2, 0), rq(1, 3, 0), rq(2, 1, 0), 1),
        (rq(1, 2, 1), rq(1, 1, 1), rq(-1, 1, 0), rq(3, 1, 1), 1),
        (rq(1, 1, 2), rq(2, 1, 1), rq(1, 3, 1), rq(-1, 2, 0), 1),
        (rq(1, 1, 4), rq(1, 1, 1), rq(1, 2, 1), rq(1, 4, 2), 2),
        (rq(3, 1, 1), rq(-1, 1, 0), rq(1, 2, 0), rq(1, 1, 1), 1),
        (rq(1, 3, 2), rq(1, 1, 1), rq(2, 1, 0), rq(-1, 1, 1), 1),
    ];
    let small = top.min(20);
    for (i, (a, b, c, d, step)) in specs.into_iter().enumerate() {
        let pair = lovejoy_pair(a.unwrap(), b.unwrap(), c.unwrap(), d.unwrap(), step)?;
        push(format!("rational pair {i}, n <= 6"), defining_relation_mismatch(&pair, 6, small)?);
    }
    Ok(out)
}
