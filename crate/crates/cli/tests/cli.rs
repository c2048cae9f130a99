use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn ftx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ftx")).args(args).output().expect("ftx runs")
}

fn ftx_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ftx"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("ftx starts");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().expect("ftx finishes")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap().trim_end().to_string()
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("ftx-test-{}-{name}", std::process::id()))
}

#[test]
fn fft_of_square_is_falling_square() {
    let out = ftx(&["transform", "--op", "fft", r#"{"basis":"monomial","coeffs":["0","0","1"]}"#]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), r#"{"basis":"falling","coeffs":["0","0","1"]}"#);
}

#[test]
fn transform_reads_stdin() {
    let out = ftx_stdin(&["transform", "--op", "ifft"], r#"{"basis":"falling","coeffs":["0","0","1"]}"#);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), r#"{"basis":"monomial","coeffs":["0","0","1"]}"#);
}

#[test]
fn touchard_two() {
    let out = ftx(&["special", "--family", "touchard", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), r#"{"basis":"monomial","coeffs":["0","1","1"]}"#);
}

#[test]
fn bernoulli_and_stirling() {
    assert_eq!(stdout(&ftx(&["special", "--family", "bernoulli", "--n", "1"])), "-1/2");
    assert_eq!(stdout(&ftx(&["special", "--family", "bernoulli", "--n", "12"])), "-691/2730");
    assert_eq!(stdout(&ftx(&["special", "--family", "stirling2", "--n", "4", "--k", "2"])), "7");
}

#[test]
fn convert_round_trip_is_byte_identical() {
    let original = r#"{"basis":"monomial","coeffs":["3/2","-1","0","7","1/9"]}"#;
    let falling = ftx(&["convert", "--to", "falling", original]);
    assert_eq!(falling.status.code(), Some(0));
    let back = ftx_stdin(&["convert", "--to", "monomial"], &stdout(&falling));
    assert_eq!(back.status.code(), Some(0));
    assert_eq!(stdout(&back), original);
}

#[test]
fn convert_reads_a_file() {
    let path = scratch("poly.json");
    std::fs::write(&path, r#"{"basis":"rising","coeffs":["0","1"]}"#).unwrap();
    let out = ftx(&["convert", "--to", "monomial", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(stdout(&out), r#"{"basis":"monomial","coeffs":["0","1"]}"#);
}

#[test]
fn numeric_transform_reports_value_and_error() {
    let out = ftx(&["transform", "--op", "fft", "--numeric", "--at", "3", "--source", "exp(1)"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // FFT(e^x)(s) = 2^s
    assert!((v["value"].as_f64().unwrap() - 8.0).abs() < 1e-10);
    assert!(v["error"].is_number());
}

#[test]
fn fractional_half_derivative() {
    let out = ftx(&["fractional", "--kind", "derivative", "--order", "0.5", "--at", "0", "--source", "exp(2)"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((v["value"].as_f64().unwrap() - 2f64.sqrt()).abs() < 1e-8);
}

#[test]
fn zeta_prints_partial_sums() {
    let out = ftx(&["zeta", "--s", "2", "--terms", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["partial_sums"].as_array().unwrap().len(), 6);
}

#[test]
fn verify_filter_runs_one_check() {
    let out = ftx(&["verify", "--filter", "eq39*"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("PASS")).collect();
    assert_eq!(rows.len(), 1);
    assert!(rows[0].contains("eq39_charlier_orthogonality"));
}

#[test]
fn verify_json_report_matches_exit_code() {
    let path = scratch("report.json");
    let out = ftx(&["verify", "--filter", "eq1*", "--seed", "7", "--parallel", "--json", path.to_str().unwrap()]);
    let report: Vec<serde_json::Value> = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(!report.is_empty());
    for entry in &report {
        for field in ["name", "layer", "status", "max_abs_error", "tolerance", "trials", "seed", "elapsed_ms"] {
            assert!(entry.get(field).is_some(), "missing {field}");
        }
    }
    let all_ok = report.iter().all(|r| matches!(r["status"].as_str(), Some("pass" | "info")));
    assert_eq!(out.status.code(), Some(if all_ok { 0 } else { 1 }));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["special", "--family", "hermite", "--n", "2"],
        vec!["transform", "--op", "fft", r#"{"basis":"falling","coeffs":[1]}"#],
        vec!["transform", "--op", "fft", r#"{"basis":"cubic","coeffs":["1"]}"#],
        vec!["verify", "--filter", "["],
        vec!["frobnicate"],
        vec!["transform", "--op", "fft", "--numeric", "--at", "1", "--source", "tan(1)"],
    ] {
        let out = ftx(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn divergent_fractional_derivative_exits_one() {
    let out = ftx(&["fractional", "--kind", "derivative", "--order", "0.5", "--at", "0", "--source", "sin(1)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}
