use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_distblock")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

#[test]
fn invariants_of_t6() {
    let out = run(&["invariants", "T6", "--verify"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["outputs"]["cof"], "0");
    assert_eq!(v["outputs"]["lambda"], Value::Null);
    assert_eq!(v["verdicts"]["det_matches_oracle"], true);
    assert_eq!(v["verdicts"]["cof_matches_oracle"], true);
}

#[test]
fn reports_are_byte_identical() {
    let args = ["sweep", "--suite", "lapexp-random", "--seed", "7", "--count", "5", "--max-vertices", "16"];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(lines(&a)[0]["verdicts"]["passed"], true);
}

#[test]
fn classify_streams_one_line_per_spec() {
    let out = run(&["classify", "2,2,5", "1,1,4", "3,4", "--verify"]);
    assert!(out.status.success());
    let v = lines(&out);
    assert_eq!(v.len(), 3);
    assert_eq!(v[0]["outputs"]["verdict"]["det"]["case"], "two-twos");
    assert_eq!(v[1]["outputs"]["verdict"]["cof"]["case"], "reciprocal-equality");
    assert_eq!(v[2]["outputs"]["verdict"]["det"]["zero"], false);
}

#[test]
fn enumerate_negative_lambda_matches_oracle() {
    let out = run(&["enumerate", "--m", "5", "--max-part", "9", "--filter", "lneg", "--verify"]);
    assert!(out.status.success());
    let v = lines(&out);
    let summary = v.last().unwrap();
    assert_eq!(summary["verdicts"]["set_matches_oracle"], true);
    let specs: Vec<&str> = v[..v.len() - 1].iter().map(|r| r["outputs"]["spec"].as_str().unwrap()).collect();
    assert!(specs.contains(&"1,1,1,5,9"));
    assert!(!specs.contains(&"1,1,1,5,8"));
}

#[test]
fn zero_lambda_family_is_singular() {
    let out = run(&["family", "--kind", "paired-t", "--params", r#"{"t4":1,"y":2}"#, "--verify"]);
    assert!(out.status.success());
    let v = &lines(&out)[0];
    assert_eq!(v["outputs"]["blocks"], serde_json::json!(["1,1,2", "1,1,8", "1,1,8"]));
    assert!(v["verdicts"].as_object().unwrap().values().all(|b| b == true));
}

#[test]
fn compute_routes_through_closed_forms() {
    for what in ["det", "cof", "lambda", "mu", "inverse"] {
        let out = run(&["compute", "star_of_blocks:1,3x2", "--what", what, "--verify"]);
        assert!(out.status.success(), "{what}");
        assert!(json(&out)["verdicts"].as_object().unwrap().values().all(|b| b == true), "{what}");
    }
}

#[test]
fn graph_file_input() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("two_blocks.json");
    std::fs::write(&path, r#"{"vertex_count": 5, "blocks": [{"parts": [[0], [1, 2]]}, {"parts": [[2], [3], [4]]}]}"#)
        .unwrap();
    let out = run(&["inverse", path.to_str().unwrap(), "--method", "both"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["verdicts"]["closed_equals_oracle"], true);
}

#[test]
fn t6_emits_inverse() {
    let out = run(&["t6", "--n", "4", "--b", "2", "--emit", "C", "--verify"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["outputs"]["C"].as_array().unwrap().len(), 12);
    assert_eq!(v["verdicts"]["rank_one_obstructed"], true);
}

#[test]
fn csv_output() {
    let out = run(&["invariants", "2,3", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("command,inputs_digest,section,key,value\n"));
    assert!(text.contains(",output,det,"));
}

#[test]
fn input_errors_exit_with_two() {
    let cases: [&[&str]; 6] = [
        &["invariants", "1,x"],
        &["t6", "--n", "6", "--b", "1"],
        &["family", "--kind", "complete-mix", "--params", r#"{"m":2}"#],
        &["compute", "t6_tn:7,1", "--what", "lambda"],
        &["inverse", "star_of_blocks:2,3x20", "--method", "oracle"],
        &["sweep", "--suite", "nope"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}
