use std::collections::BTreeMap;

use proptest::prelude::*;
use unimodal::parity::{self, FactoredInteger};

#[test]
fn triple_agreement_through_ten_thousand() {
    let rows = parity::parity_scan(10_000).unwrap();
    assert_eq!(rows.len(), 10_000);
    let bad: Vec<u64> = rows.iter().filter(|r| !r.agree()).map(|r| r.n).collect();
    assert!(bad.is_empty(), "disagreements at {bad:?}");
    assert!(rows.iter().any(|r| r.series) && rows.iter().any(|r| !r.series));
}

#[test]
fn scan_uses_the_same_series_as_the_definition() {
    let series = parity::u2_mod2_from_definition(3000).unwrap();
    for row in parity::parity_scan(3000).unwrap() {
        assert_eq!(series.coefficient(row.n as usize).unwrap().0, row.series, "n = {}", row.n);
    }
}

#[test]
fn scan_guard() {
    assert!(parity::parity_scan(parity::MAX_N + 1).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn factorizations_multiply_back(m in 1u64..2_000_000) {
        let f = FactoredInteger::new(m).unwrap();
        let product: u64 = f.factors().iter().map(|(p, e)| p.pow(*e)).product();
        prop_assert_eq!(product, m);
        prop_assert_eq!(FactoredInteger::from_factors(m, f.factors().clone()).unwrap(), f);
    }

    #[test]
    fn ideal_count_is_the_domain_count(m in 1i64..200_000) {
        let brute = parity::fundamental_solutions(m).unwrap().len() as u64;
        prop_assert_eq!(parity::ideal_count(&FactoredInteger::new(m as u64).unwrap()), brute);
    }

    #[test]
    fn counted_pairs_satisfy_the_constraints(m in 1i64..200_000) {
        for s in parity::norm_form_solutions(m).unwrap() {
            prop_assert_eq!(s.norm(), m);
            prop_assert!(s.n % 4 == 2 && s.j % 2 != 0 && -s.n < 3 * s.j && 3 * s.j <= s.n);
        }
    }

    #[test]
    fn wrong_exponents_are_rejected(m in 2u64..100_000, bump in 1u32..3) {
        let f = FactoredInteger::new(m).unwrap();
        let mut factors: BTreeMap<u64, u32> = f.factors().clone();
        *factors.values_mut().next().unwrap() += bump;
        prop_assert!(FactoredInteger::from_factors(m, factors).is_err());
    }
}
