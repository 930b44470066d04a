//! End-to-end tests of the compiled binary: exit-code contract, format
//! parity and cache behavior.

use std::process::{Command, Output};

fn burau2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burau2"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn eval_full_twist_over_z() {
    let out = burau2(&["eval", "D^2", "--ring", "int"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("[t^4, 0, 0]"), "got: {text}");

    let json = burau2(&["eval", "D^2", "--ring", "int", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["matrix"]["ring"], "zl");
    assert_eq!(v["matrix"]["entries"][0][0][0], 4);
}

#[test]
fn eval_projective_drops_scalars() {
    let out = burau2(&["eval", "x", "--projective"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("[0, 0, 1]"));
}

#[test]
fn kernel_exit_codes() {
    // in the projective kernel: exit 0
    let out = burau2(&["kernel", "x^4", "--gamma"]);
    assert_eq!(out.status.code(), Some(0));
    // not in the linear kernel: exit 1
    let out = burau2(&["kernel", "x^4"]);
    assert_eq!(out.status.code(), Some(1));
    // kernel element of the linear kernel
    let out = burau2(&["kernel", "[ y x y , x ]^4"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn malformed_words_exit_2() {
    for bad in ["[ [ y x y , x ] , 1 ]", "q", "x^", "( x"] {
        let out = burau2(&["kernel", bad]);
        assert_eq!(out.status.code(), Some(2), "input {bad:?}");
    }
    let out = burau2(&["conj", "--f", "x"]);
    assert_eq!(out.status.code(), Some(2));
    let out = burau2(&["verify", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    let out = burau2(&["verify"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn resource_caps_exit_3() {
    let out = burau2(&["stab", "9"]);
    assert_eq!(out.status.code(), Some(3));
    let out = burau2(&["stab", "0", "--closure-cap", "4"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn stab_report_format_parity() {
    let text = burau2(&["stab", "1"]);
    assert_eq!(text.status.code(), Some(0));
    let t = stdout(&text);
    assert!(t.contains("order:            64"));
    assert!(t.contains("exponent:         4"));

    let json = burau2(&["stab", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["order"], 64);
    assert_eq!(v["center"]["order"], 8);
    assert_eq!(v["derived"]["order"], 4);
    assert_eq!(v["exponent"], 4);
    assert_eq!(v["nilpotency_class"], 2);
    assert_eq!(v["normal_form"], true);
}

#[test]
fn verify_selected_checks() {
    let out = burau2(&["verify", "eq1", "golden.matrices", "remark.det-t3"]);
    assert_eq!(out.status.code(), Some(0));
    let t = stdout(&out);
    // emitted in registry order regardless of argument order
    let golden = t.find("golden.matrices").unwrap();
    let eq1 = t.find("[pass] eq1").unwrap();
    let det = t.find("remark.det-t3").unwrap();
    assert!(golden < eq1 && eq1 < det, "order wrong: {t}");

    // json carries the same verdicts
    let json = burau2(&["verify", "eq1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v[0]["id"], "eq1");
    assert_eq!(v[0]["status"], "pass");
    assert!(v[0]["citation"].as_str().unwrap().contains("β₄(Δ²) = t⁴I₃"));
}

#[test]
fn list_checks_has_the_mandated_registry() {
    let out = burau2(&["list-checks"]);
    assert_eq!(out.status.code(), Some(0));
    let t = stdout(&out);
    assert!(t.lines().count() >= 40);
    for needle in [
        "eq1",
        "cor1.2.word",
        "lem2.3.eq4",
        "eq5.powers",
        "lamplighter.windows",
        "lem3.4",
        "thmA.1.relations.n3",
        "lemA.3.normal-form.n2",
        "claim3.membership",
    ] {
        assert!(t.contains(needle), "missing {needle}");
    }
    let json = burau2(&["list-checks", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert!(v.as_array().unwrap().len() >= 40);
}

#[test]
fn cache_directory_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let first = burau2(&["stab", "0", "--cache-dir", cache]);
    assert_eq!(first.status.code(), Some(0));
    let file = dir.path().join("stab7_n0.table");
    assert!(file.exists());
    let bytes = std::fs::read(&file).unwrap();

    // second run loads the cache and leaves it untouched
    let second = burau2(&["stab", "0", "--cache-dir", cache]);
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(stdout(&first), stdout(&second));
    assert_eq!(bytes, std::fs::read(&file).unwrap());

    // the env var override works too
    let third = Command::new(env!("CARGO_BIN_EXE_burau2"))
        .args(["stab", "0"])
        .env("BURAU2_CACHE_DIR", cache)
        .output()
        .unwrap();
    assert_eq!(third.status.code(), Some(0));
    assert_eq!(stdout(&first), String::from_utf8_lossy(&third.stdout));
}

#[test]
fn verify_all_exits_zero() {
    let out = burau2(&["verify", "--all"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let t = stdout(&out);
    assert!(!t.contains("[FAIL]"));
    assert!(t.contains("0 failed"));
}

#[test]
fn conj_checks_run_from_the_cli() {
    for args in [
        vec!["conj", "--f", "1+t"],
        vec!["conj", "--f", "1", "--check", "eq4"],
        vec!["conj", "--f", "t", "--check", "lemma34"],
        vec!["conj", "--f", "1", "--check", "power", "0", "1"],
        vec!["conj", "--f", "1", "--check", "lamp", "1", "1"],
    ] {
        let out = burau2(&args);
        assert_eq!(
            out.status.code(),
            Some(0),
            "args {args:?}: {}",
            stdout(&out)
        );
    }
    // missing index arguments is a usage error
    let out = burau2(&["conj", "--f", "1", "--check", "power"]);
    assert_eq!(out.status.code(), Some(2));
}
