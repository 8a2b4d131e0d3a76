//! End-to-end tests of the `prelie` binary: exit codes, report shapes,
//! determinism, and the rendered tables.

use std::process::{Command, Output};

use prelie::scalars::{rat, ratio, EpsPoly, RatFunc};

fn prelie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prelie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn json_reports_are_byte_identical_across_runs() {
    let args = [
        "verify", "cocycle", "--window", "4", "--trials", "5", "--seed", "7", "--format", "json",
    ];
    let first = prelie(&args);
    let second = prelie(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn graded_suite_passes_at_narrow_window() {
    let out = prelie(&["verify", "graded", "--window", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("suite graded: PASS"));
}

#[test]
fn appendix1_suite_passes_at_narrow_window() {
    let out = prelie(&["verify", "appendix1", "--window", "2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = prelie(&["verify", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn undersized_window_is_a_usage_error() {
    let out = prelie(&["verify", "graded", "--window", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn zero_trials_is_a_usage_error() {
    let out = prelie(&["verify", "complex", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_eps_value_is_a_usage_error() {
    let out = prelie(&["verify", "graded", "--eps-value", "1/0"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).expect("utf-8 stderr");
    assert!(err.contains("zero denominator"), "stderr: {err}");
}

#[test]
fn eps_pole_is_reported_as_failure() {
    let out = prelie(&["verify", "cocycle", "--window", "2", "--eps-value", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("suite cocycle: FAIL"), "stdout: {text}");
    assert!(text.contains("pole at eps = 0"), "stdout: {text}");
}

#[test]
fn pole_free_eps_value_passes() {
    let out = prelie(&["verify", "graded", "--window", "5", "--eps-value", "1/17"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn all_suites_smoke_at_minimal_scale() {
    let out = prelie(&[
        "verify", "all", "--window", "2", "--trials", "1", "--seed", "42", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let reports = reports.as_array().expect("an array of suite reports");
    assert_eq!(reports.len(), 10);
    for r in reports {
        assert_eq!(r["window"], 2);
        assert_eq!(r["trials"], 1);
        assert_eq!(r["seed"], 42);
        assert!(r["failures"].as_array().expect("failures array").is_empty());
    }
}

#[test]
fn single_suite_json_is_an_object() {
    let out = prelie(&[
        "verify", "homology", "--window", "3", "--trials", "2", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert!(report.is_object());
    assert_eq!(report["suite"], "homology");
}

#[test]
fn phi_table_renders_the_origin() {
    let out = prelie(&["table", "phi", "--range", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "φ(0) = 0\n");
}

#[test]
fn cocycle_table_shows_the_degree_two_charge() {
    let out = prelie(&["table", "cocycle", "--range", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("ω(e_2,e_{-2}) = 6"), "stdout: {text}");
    assert!(text.contains("ω(e_{-2},e_2) = -6"), "stdout: {text}");
}

#[test]
fn mul_table_json_has_nine_rows_with_the_corner_value() {
    let out = prelie(&["table", "mul", "--range", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let table: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let rows = table["rows"].as_array().expect("rows array");
    assert_eq!(rows.len(), 9);
    let corner = rows
        .iter()
        .find(|r| r["p"] == 1 && r["q"] == 1)
        .expect("the (1,1) row");
    let expected = RatFunc::new(
        EpsPoly::from_coeffs(vec![rat(-1), rat(-1)]),
        EpsPoly::from_coeffs(vec![rat(1), rat(2)]),
    )
    .expect("nonzero denominator");
    assert_eq!(
        corner["value"],
        serde_json::to_value(&expected).expect("ratfunc serializes")
    );
}

#[test]
fn mul_table_honors_the_lambda_family() {
    let out = prelie(&[
        "table", "mul", "--range", "1", "--family", "lambda", "--lambda", "5/3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("f(1,1) = 2/3"), "stdout: {text}");
    assert!(text.contains("f(-1,1) = 2/3"), "stdout: {text}");
    assert!(text.contains("f(1,-1) = 8/3"), "stdout: {text}");
}

#[test]
fn lambda_table_accepts_negative_parameters() {
    let out = prelie(&[
        "table", "mul", "--range", "1", "--family", "lambda", "--lambda", "-3/2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("f(1,1) = -5/2"));
}

#[test]
fn table_rejects_negative_range() {
    let out = prelie(&["table", "mul", "--range", "-1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_text_report_includes_case_counts() {
    let out = prelie(&["verify", "cocycle", "--window", "3", "--trials", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("cases="), "stdout: {text}");
    assert!(text.contains("window=3"), "stdout: {text}");
}

#[test]
fn parse_rat_accepts_integers_and_ratios() {
    assert_eq!(prelie_cli::parse_rat("4").expect("parses"), rat(4));
    assert_eq!(prelie_cli::parse_rat("-6/4").expect("parses"), ratio(-3, 2));
    assert!(prelie_cli::parse_rat("seven").is_err());
    assert!(prelie_cli::parse_rat("1/0").is_err());
}
