use std::process::Command;

use ehrhart::cli::{run, EXIT_OK, EXIT_USAGE, EXIT_VERIFICATION};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["ehrhart"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = call(args);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn compute_reeve_json() {
    let v = json(&["compute", "reeve:h=6", "--format", "json"]);
    assert_eq!(v["dim"], 3);
    assert_eq!(v["label"], "reeve:h=6");
    assert_eq!(v["method"], "parallelepiped");
    assert_eq!(v["hstar"], serde_json::json!([1, 0, 5, 0]));
    assert_eq!(v["ehrhart"], serde_json::json!(["1/1", "1/1", "1/1", "1/1"]));
    assert!(v.get("roots").is_none());
}

#[test]
fn roots_are_listed() {
    let v = json(&["compute", "cross-polytope:d=3", "--roots", "--format", "json"]);
    let roots = v["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 3);
    for r in roots {
        let re: f64 = r[0].as_str().unwrap().parse().unwrap();
        assert!((re + 0.5).abs() < 1e-9);
    }
}

#[test]
fn methods_agree_apart_from_the_label() {
    for spec in ["reeve:h=4", "lecture-hall:2,3,4", "delta-1q:1,1,3"] {
        let mut a = json(&["compute", spec, "--method", "counting", "--format", "json"]);
        let mut b = json(&["compute", spec, "--method", "parallelepiped", "--format", "json"]);
        assert_eq!(a["method"], "counting");
        assert_eq!(b["method"], "parallelepiped");
        a["method"] = Value::Null;
        b["method"] = Value::Null;
        assert_eq!(a, b, "{spec}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["classify", "payne:r=0,s=3,k=2", "--format", "json"][..],
        &["polygons", "--n", "20", "--seed", "7", "--format", "json"][..],
        &["scan-lecture-hall", "--amax", "6", "--bmax", "6", "--format", "csv"][..],
    ] {
        assert_eq!(call(args), call(args));
    }
}

#[test]
fn scan_csv_header() {
    let (code, out, _) = call(&["scan-lecture-hall", "--amax", "8", "--bmax", "8", "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("a,b,positive,unimodal,linear_coeff_num,linear_coeff_den"));
    assert_eq!(lines.count(), 64);
    assert!(out.contains("\n7,7,false,true,-1,6\n"));
    assert!(out.contains("\n6,8,false,true,0,1\n"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["compute", "dodecahedron:d=3"][..],
        &["compute", "reeve:h=0"][..],
        &["compute", "reeve:h=2", "--method", "guess"][..],
        &["threshold", "--d", "2"][..],
        &["frobnicate"][..],
    ] {
        let (code, _, err) = call(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty());
    }
    assert_eq!(call(&["--help"]).0, EXIT_OK);
    assert_eq!(call(&["--version"]).0, EXIT_OK);
}

#[test]
fn budget_failures_exit_one() {
    let (code, _, err) =
        call(&["--budget", "10", "compute", "chiseled-cube:d=4", "--method", "counting"]);
    assert_eq!(code, EXIT_VERIFICATION);
    assert!(err.contains("exceeds budget"), "{err}");
    // auto mode falls back to the closed form
    let v = json(&["--budget", "10", "compute", "chiseled-cube:d=4", "--format", "json"]);
    assert_eq!(v["method"], "closed-form");
}

#[test]
fn threshold_values() {
    assert_eq!(json(&["threshold", "--d", "3", "--format", "json"])["threshold"], 12);
    assert_eq!(json(&["threshold", "--d", "4", "--format", "json"])["threshold"], 26);
}

#[test]
fn binary_reads_budget_from_env() {
    let bin = env!("CARGO_BIN_EXE_ehrhart");
    let run_with = |budget: &str, extra: &[&str]| {
        Command::new(bin)
            .env("EHRHART_BUDGET", budget)
            .args(extra)
            .args(["compute", "chiseled-cube:d=4", "--method", "counting", "--format", "json"])
            .output()
            .unwrap()
    };
    assert_eq!(run_with("10", &[]).status.code(), Some(EXIT_VERIFICATION));
    assert_eq!(run_with("100000000", &[]).status.code(), Some(EXIT_OK));
    assert_eq!(run_with("10", &["--budget", "100000000"]).status.code(), Some(EXIT_OK));
    assert_eq!(run_with("lots", &[]).status.code(), Some(EXIT_USAGE));
}
