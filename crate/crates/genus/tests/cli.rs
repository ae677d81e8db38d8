//! End-to-end checks of the binary: exit codes, determinism of reports,
//! report files, and the documented scenario examples.

use std::process::{Command, Output};

use serde_json::Value;

fn genus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genus"))
        .args(args)
        .env_remove("GENUS_SEED")
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn without_timings(mut v: Value) -> Value {
    for check in v["checks"].as_array_mut().expect("checks array") {
        check["elapsed_ms"] = Value::from(0);
    }
    v
}

#[test]
fn documented_examples_pass() {
    let out = genus(&["branch-density", "--lambda", "0", "--depth", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["overall"], "PASS");
    assert_eq!(r["checks"][0]["details"]["order"], "60");

    let out = genus(&["soluble-decode", "--lambda", "10110", "--len", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["checks"][0]["details"]["decoded"], "10110");

    let out = genus(&["branch-distinguish", "--mu", "000", "--nu", "010", "--depth", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["overall"], "PASS");
    assert_eq!(r["checks"][0]["details"]["section_orders"], Value::from(vec![3, 5]));
}

#[test]
fn all_scenario_emits_at_least_ten_checks() {
    let out = genus(&["all", "--seed", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert!(r["checks"].as_array().unwrap().len() >= 10);
    assert_eq!(r["overall"], "PASS");
}

#[test]
fn reports_are_deterministic_modulo_timings() {
    let args = ["soluble-ideal-equality", "--samples", "200", "--seed", "31"];
    let a = genus(&args);
    let b = genus(&args);
    assert_eq!(
        without_timings(report(&a)),
        without_timings(report(&b))
    );
}

#[test]
fn seed_env_var_matches_flag() {
    let flag = genus(&["soluble-translate", "--samples", "100", "--seed", "77"]);
    let env = Command::new(env!("CARGO_BIN_EXE_genus"))
        .args(["soluble-translate", "--samples", "100"])
        .env("GENUS_SEED", "77")
        .output()
        .unwrap();
    assert_eq!(
        without_timings(report(&flag)),
        without_timings(report(&env))
    );
}

#[test]
fn exit_codes() {
    // Usage errors: unknown scenario, bad bitstring, bad seed env.
    assert_eq!(genus(&["no-such-scenario"]).status.code(), Some(2));
    assert_eq!(
        genus(&["branch-density", "--lambda", "012"]).status.code(),
        Some(2)
    );
    let bad_env = Command::new(env!("CARGO_BIN_EXE_genus"))
        .args(["branch-conditions"])
        .env("GENUS_SEED", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(bad_env.status.code(), Some(2));

    // A check-level error (indistinguishable prefixes) is a failed run.
    let out = genus(&["branch-distinguish", "--mu", "01", "--nu", "01"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["checks"][0]["status"], "ERROR");

    // Spent budget yields FAIL-INCONCLUSIVE, exit 3, never a silent PASS.
    let out = genus(&["branch-conditions", "--budget-ms", "0"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(report(&out)["overall"], "FAIL-INCONCLUSIVE");
}

#[test]
fn out_flag_writes_the_same_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = genus(&[
        "branch-conditions",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let on_disk: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(on_disk, report(&out));
}
