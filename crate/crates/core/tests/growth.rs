use num_bigint::BigInt;
use unimodal::asymptotics::{self, GrowthTarget};

const CHECKPOINTS: [usize; 3] = [500, 1000, 2000];

#[test]
fn deviation_from_the_main_term_shrinks() {
    for target in GrowthTarget::ALL {
        let report = asymptotics::ratio_report(target, &CHECKPOINTS).unwrap();
        assert!(report.deviation_decreasing(), "{target}: {:?}", report.rows);
    }
}

#[test]
fn counts_never_decrease() {
    for target in [GrowthTarget::U2bar, GrowthTarget::U2] {
        assert_eq!(asymptotics::monotonicity_check(target, 2000).unwrap(), None, "{target}");
    }
}

#[test]
fn first_difference_is_nonnegative() {
    let d = asymptotics::u2bar_first_difference(2000).unwrap();
    assert_eq!(d.first_negative(), None);
}

#[test]
fn grouped_f_terms_are_nonnegative() {
    assert_eq!(asymptotics::f_group(2000).first_negative(), None);
}

#[test]
fn first_decrease_finds_a_drop() {
    let v: Vec<BigInt> = [1, 2, 2, 1, 5].into_iter().map(BigInt::from).collect();
    assert_eq!(asymptotics::first_decrease(&v), Some(2));
}

#[test]
fn report_json_carries_exact_counts() {
    let r = asymptotics::ratio_report(GrowthTarget::U2, &[6, 10]).unwrap();
    let v = r.to_json();
    assert_eq!(v["rows"][0]["count"], "5");
    assert_eq!(v["target"], "u2");
}
