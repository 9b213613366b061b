//! End-to-end tests for the `hermdig` binary: golden outputs, exit codes,
//! and run-to-run determinism.

use std::process::Command;

fn hermdig() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hermdig"))
}

fn run(args: &[&str]) -> (String, String, i32) {
    let out = hermdig().args(args).output().expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn charpoly_of_named_family() {
    let (stdout, _, code) = run(&["charpoly", "--family", "K3prime"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "t^3 - 3t + 2");
}

#[test]
fn charpoly_adjacency_matrix_switch() {
    let (stdout, _, code) = run(&["charpoly", "--family", "K:4", "--matrix", "a"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "t^4 - 6t^2 - 8t - 3");
}

#[test]
fn spectrum_json_of_reversed_four_cycle() {
    let (stdout, _, code) = run(&["spectrum", "Ctilde:4"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["tool"], "hermdig");
    let report = &v["report"];
    assert_eq!(report["n"], 4);
    assert_eq!(report["charpoly_plain"], "t^4 - 4t^2 + 4");
    let eigs = report["eigenvalues"].as_array().unwrap();
    let mults = report["multiplicities"].as_array().unwrap();
    assert_eq!(eigs.len(), 2);
    assert!((eigs[0].as_f64().unwrap() - 2f64.sqrt()).abs() < 1e-8);
    assert_eq!(mults[0], 2);
    assert_eq!(report["symmetric_about_zero"], true);
}

#[test]
fn spectrum_accepts_raw_hd6_and_text() {
    let (hd6, _, code) = run(&["family", "Ctilde:4"]);
    assert_eq!(code, 0);
    let (stdout, _, code) = run(&["spectrum", hd6.trim(), "--format", "plain"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("1.41421356^2"));

    let (stdout, _, code) = run(&["spectrum", "n=2\n0=1", "--format", "plain"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("1.00000000^1"));
}

#[test]
fn bad_hd6_exits_two() {
    let (_, stderr, code) = run(&["spectrum", "A!"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("error"));
    let (_, _, code) = run(&["charpoly", "ZZZ"]);
    assert_eq!(code, 2);
    let (_, stderr, code) = run(&["family", "D:2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("n >= 3"));
}

#[test]
fn unknown_flags_rejected() {
    let (_, _, code) = run(&["spectrum", "AO", "--frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn switch_report_preserves_charpoly() {
    let (stdout, _, code) = run(&["switch", "--op", "local-reversal", "--set", "1,2", "T:5"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(
        v["report"]["charpoly_before"],
        v["report"]["charpoly_after"]
    );
    // A digon in the cut is an input error.
    let (_, stderr, code) = run(&["switch", "--op", "local-reversal", "--set", "1", "K3prime"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("digon"));
}

#[test]
fn four_way_switch_cli() {
    let (stdout, _, code) = run(&[
        "switch",
        "--op",
        "four-way",
        "--labels",
        "1,i",
        "n=2\n0=1",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    // Digon becomes the single arc 0 -> 1: code AO.
    assert_eq!(v["report"]["output"], "AO");
}

#[test]
fn cycle_normal_form_cli() {
    let (stdout, _, code) = run(&["switch", "--op", "cycle-normal-form", "C:5"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!(v["report"]["tag"].is_string());
    assert_eq!(v["report"]["charpoly"], "t^5 - 5t^3 + 5t - 2");
}

#[test]
fn product_of_digon_squares_to_four_cycle() {
    let (stdout, _, code) = run(&["product", "K:2", "K:2"]);
    assert_eq!(code, 0);
    let d = hermdig::codec::decode(stdout.trim()).unwrap();
    let c4 = hermdig::family::Family::CycleGraph(4).build().unwrap();
    assert!(hermdig::canon::is_isomorphic(&d, &c4).unwrap());
}

#[test]
fn verify_suite_exit_codes() {
    let (stdout, _, code) = run(&["verify", "--suite", "radius", "-n", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("ALL PASS"));
    assert!(stdout.lines().all(|l| !l.starts_with("FAIL")));
    let (_, stderr, code) = run(&["verify", "--suite", "nonsense"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown suite"));
}

#[test]
fn enumerate_census_outputs() {
    let dir = std::env::temp_dir().join(format!("hermdig-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let json_path = dir.join("census.json");
    let csv_path = dir.join("classes.csv");
    let (stdout, _, code) = run(&[
        "enumerate",
        "-n",
        "3",
        "--stats",
        "--out",
        json_path.to_str().unwrap(),
        "--classes-csv",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let stats: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(stats["distinct_charpolys"], 6);
    assert_eq!(stats["digraph_count"], 16);

    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(json["report"]["classes"].as_array().unwrap().len(), 6);

    let csv = std::fs::read_to_string(&csv_path).unwrap();
    assert_eq!(csv.lines().count(), 6);
    assert!(csv.lines().any(|l| l.starts_with("t^3 - 3t + 2;1;")));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn order_six_census_requires_large_flag() {
    let (_, stderr, code) = run(&["enumerate", "-n", "6"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--large"));
}

#[test]
fn census_output_is_deterministic() {
    let a = run(&["enumerate", "-n", "4", "--format", "csv"]);
    let b = run(&["enumerate", "-n", "4", "--format", "csv", "--jobs", "2"]);
    assert_eq!(a.2, 0);
    assert_eq!(a.0, b.0);
}

#[test]
fn sachs_cross_check_cli() {
    let (stdout, _, code) = run(&["sachs", "K4prime"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["report"]["coefficients_match"], true);
    assert_eq!(v["report"]["trace_h3"], -12); // two negative-weight triangles
}
