use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unimodal"))
        .args(args)
        .env_remove("UNIMODAL_ORDER")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn expand_partitions_as_csv() {
    let out = run(&["expand", "--series", "P", "--order", "4", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("key,m,n,coefficient"));
    let coeffs: Vec<&str> = lines.map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(coeffs, ["1", "1", "2", "3", "5"]);
}

#[test]
fn expand_left_heavy_has_three_at_q3() {
    let out = run(&["expand", "--series", "Ubar", "--order", "10"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["series"], "Ubar");
    assert_eq!(v["order"], 10);
    assert_eq!(v["coefficients"][3], "3");
}

#[test]
fn expand_refined_rank_list() {
    let out = run(&["expand", "--series", "U2-q", "--order", "6", "--zeta"]);
    let v = json(&out);
    let at6: Vec<(i64, String)> = v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["n"] == 6)
        .map(|e| (e["m"].as_i64().unwrap(), e["c"].as_str().unwrap().to_string()))
        .collect();
    assert_eq!(at6, [(-1, "1".to_string()), (0, "3".to_string()), (1, "1".to_string())]);
}

#[test]
fn default_order_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_unimodal"))
        .args(["expand", "--series", "P"])
        .env("UNIMODAL_ORDER", "7")
        .output()
        .unwrap();
    assert_eq!(json(&out)["coefficients"].as_array().unwrap().len(), 8);
    assert_eq!(json(&run(&["expand", "--series", "P"]))["order"], 100);
}

#[test]
fn output_is_byte_stable() {
    let args = ["expand", "--series", "Ubar2-q", "--order", "30", "--zeta", "--format", "csv"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["verify", "--identity", "heine", "--order", "20"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["expand", "--series", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["expand", "--series", "P", "--order", "x"]).status.code(), Some(2));
    assert_eq!(run(&["expand", "--series", "P", "--order", "999999"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--identity", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn count_matches_the_worked_example() {
    let v = json(&run(&["count", "--family", "u2", "--n", "6"]));
    assert_eq!(v["count"], 5);
    assert_eq!(v["by_rank"]["0"], 3);
}

#[test]
fn verify_all_passes() {
    let out = run(&["verify", "--all", "--order", "40"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v.as_array().unwrap().len(), 20);
}

#[test]
fn parity_scan_has_no_disagreements() {
    let out = run(&["parity", "--max-n", "10000"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["disagreements"], 0);
    assert_eq!(v["rows"].as_array().unwrap().len(), 10_000);
}

#[test]
fn parity_csv_header() {
    let out = run(&["parity", "--max-n", "6", "--emit", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("n,u2_mod2,rep_half_mod2,predicate,agree"));
    assert_eq!(text.lines().last(), Some("6,1,1,true,true"));
}

#[test]
fn asym_reports_a_decreasing_deviation() {
    let out = run(&["asym", "--target", "u2bar", "--checkpoints", "500,1000,2000", "--emit", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["deviation_decreasing"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
}

#[test]
fn scan_nonneg_reports_without_asserting() {
    let out = run(&["scan-nonneg", "--family", "ubar", "--max-n", "40"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["negative_count"].is_u64());
}
