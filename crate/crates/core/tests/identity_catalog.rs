use unimodal::identities::{verify, verify_all, verify_perturbed, CATALOG};

#[test]
fn every_entry_verifies_at_its_default_order() {
    let reports = verify_all(40);
    let failures: Vec<String> = reports.iter().filter(|r| !r.pass).map(|r| r.to_string()).collect();
    for r in &reports {
        println!("{r}");
    }
    assert!(failures.is_empty(), "{failures:#?}");
    let keys: Vec<_> = reports.iter().map(|r| r.key.as_str()).collect();
    let expected: Vec<_> = CATALOG.iter().map(|r| r.key).collect();
    assert_eq!(keys, expected);
}

#[test]
fn perturbing_any_entry_flips_the_verdict() {
    for rec in CATALOG {
        let r = verify_perturbed(rec.key, 20, (0, 5)).unwrap();
        assert!(!r.pass, "{} still passes after perturbation", rec.key);
    }
}

#[test]
fn eq1_2_perturbation_is_located() {
    let r = verify_perturbed("eq1.2", 40, (3, 17)).unwrap();
    assert!(!r.pass);
    assert_eq!(r.first_mismatch, Some((3, 17)));
}

#[test]
fn report_json_is_stable() {
    let a = verify("lemma3.1", 30).unwrap().to_json().to_string();
    let b = verify("lemma3.1", 30).unwrap().to_json().to_string();
    assert_eq!(a, b);
}
