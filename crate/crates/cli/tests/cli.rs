//! End-to-end tests of the `wptwist` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wptwist")).args(args).output().expect("binary runs")
}

fn json_of(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn resolve_hj_chain() {
    assert_eq!(json_of(&["resolve", "hj", "--alpha", "11", "--beta", "2"]), json!({ "chain": [-6, -2] }));
    assert_eq!(json_of(&["resolve-hj", "--alpha", "11", "--beta", "2"]), json!({ "chain": [-6, -2] }));
}

#[test]
fn cone_points() {
    let v = json_of(&["resolve", "cone", "--weights", "41,7,83"]);
    let points = v["points"].as_array().unwrap();
    assert_eq!(points.len(), 20);
    assert_eq!(points[0], json!([11, 2, 23]));
    assert_eq!(v, json_of(&["cone", "--weights", "41,7,83"]));
}

#[test]
fn fiber_classification() {
    let curve = fixture("fixtures/curve_11_5_6.json");
    let v = json_of(&["fib", "classify", "--curve", &curve, "--elliptic", "1,2,3", "--ell", "6"]);
    assert_eq!(
        v,
        json!({
            "fibers": [{ "type": "II", "count": 2 }, { "type": "II*", "count": 2 }],
            "alpha_sum": "2/1",
            "euler_sum": 24,
            "chi": 24,
        })
    );
    assert_eq!(v, json_of(&["classify-fibers", "--curve", &curve, "--elliptic", "1,2,3", "--ell", "6"]));
}

#[test]
fn unbalanced_fibration_is_a_validation_error() {
    let curve = fixture("fixtures/curve_11_5_6.json");
    let out = run(&["fib", "classify", "--curve", &curve, "--elliptic", "1,1,1", "--ell", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fibration_euler_number() {
    let v = json_of(&["fib", "euler", "--n", "132", "--fiber-euler", "4"]);
    assert_eq!(v["chi"], json!(-2592));
    assert_eq!(v["bound"], json!({ "lower": 48 - 24 * 132, "upper": 48, "holds": true }));
}

#[test]
fn twist_build_reports_calabi_yau() {
    let v = json_of(&[
        "twist",
        "build",
        "--v1",
        &fixture("fixtures/curve_11_5_6.json"),
        "--v2",
        &fixture("fixtures/elliptic_1_2_3.json"),
    ]);
    assert_eq!(v["weights"], json!([5, 6, 22, 33]));
    assert_eq!(v["degree"], json!(66));
    assert_eq!(v["report"], json!({ "sufficient": true, "fiber_cy": true, "total_cy": true, "genus": 1 }));
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 4);
    assert!(terms.iter().all(|t| t["coeff"] == "1/1" || t["coeff"] == "-1/1"));
}

#[test]
fn check_cy_on_a_factor() {
    let e = fixture("fixtures/elliptic_1_2_3.json");
    let v = json_of(&["check-cy", &e]);
    assert_eq!(v["report"]["sufficient"], json!(true));
    assert_eq!(v["report"]["genus"], json!(1));
    assert_eq!(v, json_of(&["twist", "check-cy", &e]));
}

#[test]
fn euler_and_genus() {
    let v = json_of(&["euler", "orbifold", "--weights", "41,42,498,1162,1743", "--degree", "3486"]);
    assert_eq!(v["chi"], json!(960));
    let g = json_of(&["genus", "--weights", "1,1,12,44,66", "--degrees", "132"]);
    assert_eq!(g["genus"], json!(9));
}

#[test]
fn conifold() {
    let v = json_of(&["hodge", "conifold", "--h11", "5", "--h21", "101", "--nodes", "32", "--relations", "1"]);
    assert_eq!((v["h11"].clone(), v["h21"].clone(), v["delta_chi"].clone()), (json!(6), json!(70), json!(64)));
    let bad = run(&["conifold", "--h11", "5", "--h21", "101", "--nodes", "1", "--relations", "2"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn normalize_reports_steps() {
    let v = json_of(&["normalize", "--weights", "2,2,1", "--degree", "4"]);
    assert_eq!(v["weights"], json!([1, 1, 1]));
    assert_eq!(v["degree"], json!(2));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["resolve", "hj", "--alpha", "4", "--beta", "2"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["euler", "orbifold", "--weights", "0,1", "--degree", "2"]).status.code(), Some(2));
}

#[test]
fn enumerate_golden_csv() {
    for (args, golden) in [
        (vec!["enumerate", "k3", "--format", "csv"], "golden/k3.csv"),
        (vec!["--format", "csv", "enumerate", "cy3-k3", "--bounds", "12"], "golden/cy3_k3.csv"),
    ] {
        let out = run(&args);
        assert!(out.status.success());
        let expected = std::fs::read_to_string(fixture(golden)).unwrap();
        assert_eq!(String::from_utf8(out.stdout).unwrap(), expected, "{golden}");
    }
}

#[test]
fn enumerate_header_and_markers() {
    let out = run(&["enumerate", "k3", "--format", "csv", "--seedless"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("base_weights,fiber_weights,ell,image_weights,degree,chi,fibers,reference"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.iter().filter(|l| l.ends_with(",listed")).count(), 11);
    assert!(rows.iter().all(|l| l.ends_with(",listed") || l.ends_with(",extra")));
}

#[test]
fn enumerate_empty_bounds() {
    let v = json_of(&["enumerate", "k3", "--bounds", "1"]);
    assert_eq!(v, json!([]));
}
