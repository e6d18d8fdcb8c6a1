//! Ring axioms for truncated series and structural properties of the rank
//! generating functions.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use unimodal::gf::rank::{self, ZetaPair};
use unimodal::gf::{build_series, NamedSeriesKey};
use unimodal::ring::{Mod2, Ring};
use unimodal::series::Series;
use unimodal::zeta::ZetaLaurent;

const N: usize = 30;
const CASES: u32 = 128;

fn coeffs<T: std::fmt::Debug>(elem: impl Strategy<Value = T>) -> impl Strategy<Value = Vec<T>> {
    prop::collection::vec(elem, 0..=N + 1)
}

fn bigint_series() -> impl Strategy<Value = Series<BigInt>> {
    coeffs(-50i64..50).prop_map(|v| Series::from_coeffs(v.into_iter().map(BigInt::from).collect(), N))
}

fn rational_series() -> impl Strategy<Value = Series<BigRational>> {
    coeffs((-20i64..20, 1i64..9)).prop_map(|v| {
        Series::from_coeffs(
            v.into_iter().map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b))).collect(),
            N,
        )
    })
}

fn mod2_series() -> impl Strategy<Value = Series<Mod2>> {
    coeffs(any::<bool>()).prop_map(|v| Series::from_coeffs(v.into_iter().map(Mod2).collect(), N))
}

fn zeta_series() -> impl Strategy<Value = Series<ZetaLaurent>> {
    let laurent = prop::collection::vec((-3i64..=3, -9i64..9), 0..4)
        .prop_map(|t| ZetaLaurent::from_terms(t.into_iter().map(|(m, c)| (m, BigInt::from(c)))));
    coeffs(laurent).prop_map(|v| Series::from_coeffs(v, N))
}

/// Sets the constant term to one so the series is a unit.
fn unit<R: Ring>(mut s: Series<R>) -> Series<R> {
    s.set(0, R::one());
    s
}

fn check_axioms<R: Ring>(a: &Series<R>, b: &Series<R>, c: &Series<R>) -> Result<(), TestCaseError> {
    let zero = Series::zero(N);
    let one = Series::one(N);
    let add = |x: &Series<R>, y: &Series<R>| x.add(y).unwrap();
    let mul = |x: &Series<R>, y: &Series<R>| x.mul(y).unwrap();
    prop_assert_eq!(add(&add(a, b), c), add(a, &add(b, c)));
    prop_assert_eq!(add(a, b), add(b, a));
    prop_assert_eq!(add(a, &zero), a.clone());
    prop_assert_eq!(add(a, &a.neg()), zero);
    prop_assert_eq!(mul(&mul(a, b), c), mul(a, &mul(b, c)));
    prop_assert_eq!(mul(a, b), mul(b, a));
    prop_assert_eq!(mul(a, &one), a.clone());
    prop_assert_eq!(mul(a, &add(b, c)), add(&mul(a, b), &mul(a, c)));
    let u = unit(c.clone());
    prop_assert_eq!(mul(&u, &u.invert().unwrap()), one);
    prop_assert_eq!(mul(a, &u).div(&u).unwrap(), a.clone());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn bigint_series_form_a_ring(a in bigint_series(), b in bigint_series(), c in bigint_series()) {
        check_axioms(&a, &b, &c)?;
    }

    #[test]
    fn rational_series_form_a_ring(a in rational_series(), b in rational_series(), c in rational_series()) {
        check_axioms(&a, &b, &c)?;
    }

    #[test]
    fn mod2_series_form_a_ring(a in mod2_series(), b in mod2_series(), c in mod2_series()) {
        check_axioms(&a, &b, &c)?;
    }

    #[test]
    fn zeta_series_form_a_ring(a in zeta_series(), b in zeta_series(), c in zeta_series()) {
        check_axioms(&a, &b, &c)?;
    }

    #[test]
    fn reduction_mod2_is_a_homomorphism(a in bigint_series(), b in bigint_series()) {
        let prod = a.mul(&b).unwrap().reduce_mod2();
        prop_assert_eq!(prod, a.reduce_mod2().mul(&b.reduce_mod2()).unwrap());
        let sum = a.add(&b).unwrap().reduce_mod2();
        prop_assert_eq!(sum, a.reduce_mod2().add(&b.reduce_mod2()).unwrap());
    }

    #[test]
    fn zeta_one_is_a_homomorphism(a in zeta_series(), b in zeta_series()) {
        let prod = a.mul(&b).unwrap().at_zeta_one();
        prop_assert_eq!(prod, a.at_zeta_one().mul(&b.at_zeta_one()).unwrap());
    }
}

const RANK_KEYS: [NamedSeriesKey; 11] = [
    NamedSeriesKey::Uzeta,
    NamedSeriesKey::R,
    NamedSeriesKey::Rbar,
    NamedSeriesKey::Rbar2,
    NamedSeriesKey::R2,
    NamedSeriesKey::Ubar,
    NamedSeriesKey::Ubar2,
    NamedSeriesKey::U2,
    NamedSeriesKey::UbarNeg,
    NamedSeriesKey::Ubar2Neg,
    NamedSeriesKey::U2Neg,
];

#[test]
fn rank_series_are_conjugation_symmetric() {
    for key in RANK_KEYS {
        let s = build_series(key, 40).unwrap();
        assert!(s.is_conjugation_symmetric(), "{key}");
        assert_eq!(s.conjugate(), s, "{key}");
    }
}

#[test]
fn rank_counts_marginalize_to_totals() {
    let one = ZetaPair::unit();
    let totals: [(NamedSeriesKey, Series<BigInt>); 9] = [
        (NamedSeriesKey::Uzeta, rank::strongly_unimodal(&one, 40).unwrap()),
        (NamedSeriesKey::R, rank::partitions(40)),
        (NamedSeriesKey::Rbar, rank::overpartition_rank(&one, 40).unwrap()),
        (NamedSeriesKey::Rbar2, rank::overpartition_m2_rank(&one, 40).unwrap()),
        (NamedSeriesKey::R2, rank::odd_distinct_m2_rank(&one, 40).unwrap()),
        (NamedSeriesKey::Ubar, rank::left_heavy(&one, 40).unwrap()),
        (NamedSeriesKey::Ubar2, rank::m2_left_heavy_overlined(&one, 40).unwrap()),
        (NamedSeriesKey::U2, rank::m2_left_heavy(&one, 40).unwrap()),
        (NamedSeriesKey::U2Neg, rank::m2_left_heavy(&one, 40).unwrap().negate_q()),
    ];
    for (key, total) in totals {
        assert_eq!(build_series(key, 40).unwrap().at_zeta_one(), total, "{key}");
    }
}

#[test]
fn ramanujan_congruences() {
    let p = rank::partitions::<BigInt>(200);
    let c = p.coeffs();
    for n in (4..=200).step_by(5) {
        assert_eq!(&c[n] % 5, BigInt::from(0), "p({n})");
    }
    for n in (5..=200).step_by(7) {
        assert_eq!(&c[n] % 7, BigInt::from(0), "p({n})");
    }
    assert_ne!(&c[6] % 5, BigInt::from(0));
}
