//! End-to-end runs of the compiled binary: exit codes, output formats,
//! determinism, and a handful of pinned values.

use std::process::{Command, Output};

fn dunkl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dunkl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_lines(out: &Output) -> Vec<serde_json::Value> {
    String::from_utf8(out.stdout.clone())
        .expect("utf8 stdout")
        .lines()
        .map(|l| serde_json::from_str(l).expect("each line is a JSON object"))
        .collect()
}

#[test]
fn verify_all_passes_and_exits_zero() {
    let out = dunkl(&["verify", "--m", "2", "--nu", "0.5", "--truncation", "36"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = stdout_lines(&out);
    assert!(rows.len() > 20, "all suites together emit many reports");
    for row in &rows {
        assert_eq!(row["pass"], true, "identity {} failed", row["identity"]);
        assert_eq!(row["m"], 2);
    }
}

#[test]
fn verify_failing_identity_exits_one() {
    // weight k_1 = -0.5 lies outside the admissible cone, so the validity
    // check fails while residual checks still pass
    let out = dunkl(&[
        "verify",
        "--m",
        "2",
        "--nu=-0.75",
        "--suite",
        "eigen",
        "--truncation",
        "36",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let rows = stdout_lines(&out);
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["identity"], "eigen-validity");
    assert_eq!(rows[0]["pass"], false);
    assert_eq!(rows[1]["pass"], true);
    assert_eq!(rows[2]["pass"], true);
}

#[test]
fn bad_arguments_exit_two() {
    // wrong multi-index length
    let out = dunkl(&["verify", "--m", "2", "--nu", "0.5,0.7", "--suite", "eigen"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    // unknown suite
    let out = dunkl(&["verify", "--m", "2", "--nu", "0.5", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown subcommand (handled by the argument parser itself)
    let out = dunkl(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    // truncation below the floor
    let out = dunkl(&[
        "verify", "--m", "4", "--nu", "0.1,0.2,0.3", "--truncation", "7",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // malformed grid
    let out = dunkl(&["eval", "--m", "2", "cosm", "--grid", "0..1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_output_is_byte_identical_across_runs() {
    let args = [
        "verify",
        "--m",
        "3",
        "--nu",
        "0.333,0.667",
        "--truncation",
        "36",
        "--seed",
        "41",
    ];
    let a = dunkl(&args);
    let b = dunkl(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn eval_cosm_needs_no_multi_index() {
    let out = dunkl(&["eval", "--m", "4", "cosm", "--grid", "0:0:1"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = stdout_lines(&out);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["x_re"], 0.0);
    assert_eq!(rows[0]["value_re"], 1.0);
    assert_eq!(rows[0]["value_im"], 0.0);
}

#[test]
fn eval_hyper_bessel_hits_the_classical_sinc_value() {
    // J at order two with index one half is sin(x)/x; at pi/2 that is 2/pi
    let out = dunkl(&[
        "eval",
        "--m",
        "2",
        "--nu",
        "0.5",
        "hyperbessel",
        "--grid",
        "1.5707963267948966:1.5707963267948966:0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows = stdout_lines(&out);
    assert_eq!(rows.len(), 1);
    let value = rows[0]["value_re"].as_f64().unwrap();
    assert!((value - std::f64::consts::FRAC_2_PI).abs() < 1e-14);
}

#[test]
fn eval_grid_covers_both_endpoints() {
    let out = dunkl(&["eval", "--m", "3", "cosm", "--grid", "0:10:0.5"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = stdout_lines(&out);
    assert_eq!(rows.len(), 21);
    assert_eq!(rows[0]["x_re"], 0.0);
    assert_eq!(rows[20]["x_re"], 10.0);
}

#[test]
fn eval_kernel_reports_both_routes() {
    let out = dunkl(&[
        "eval", "--m", "2", "--nu", "0.5", "kernel", "--grid", "0.7:0.7:0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows = stdout_lines(&out);
    assert_eq!(rows.len(), 1);
    let diff = rows[0]["abs_diff"].as_f64().unwrap();
    assert!(diff < 1e-12, "series route and closed form agree, got {diff}");
    // the literal reading disagrees away from x = 1; the difference column
    // makes that visible
    let out = dunkl(&[
        "eval",
        "--m",
        "2",
        "--nu",
        "0.5",
        "kernel",
        "--grid",
        "0.7:0.7:0",
        "--kernel-form",
        "alternate",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows = stdout_lines(&out);
    let diff = rows[0]["abs_diff"].as_f64().unwrap();
    assert!(diff > 1e-6, "alternate reading should visibly disagree, got {diff}");
}

#[test]
fn eval_csv_has_header_and_matching_columns() {
    let out = dunkl(&[
        "eval", "--m", "2", "--nu", "0.5", "cosm", "--grid", "0:1:0.5", "--output", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(
        lines[0],
        "x_re,x_im,value_re,value_im,error_estimate,terms_used,status"
    );
    for line in &lines[1..] {
        assert_eq!(line.split(',').count(), 7, "row {line}");
    }
}

#[test]
fn verify_csv_has_header_once_across_suites() {
    let out = dunkl(&[
        "verify",
        "--m",
        "2",
        "--nu",
        "0.5",
        "--truncation",
        "36",
        "--output",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let headers = text
        .lines()
        .filter(|l| l.starts_with("identity,"))
        .count();
    assert_eq!(headers, 1);
}

#[test]
fn series_eigen_at_zero_is_the_constant_one() {
    let out = dunkl(&[
        "series", "--m", "2", "--nu", "0.5", "eigen", "--lambda", "0", "--truncation", "8",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows = stdout_lines(&out);
    let coeffs = rows[0]["coefficients"].as_array().unwrap();
    assert_eq!(coeffs.len(), 9);
    assert_eq!(coeffs[0][0], 1.0);
    assert_eq!(coeffs[0][1], 0.0);
    for c in &coeffs[1..] {
        assert_eq!(c[0], 0.0);
        assert_eq!(c[1], 0.0);
    }
}

#[test]
fn series_eigen_first_coefficient_is_the_shifted_reciprocal() {
    // m = 2, nu = 1/2: mu = i lambda, first weight is 2, so a_1 = i / 3
    let out = dunkl(&[
        "series", "--m", "2", "--nu", "0.5", "eigen", "--truncation", "8",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows = stdout_lines(&out);
    assert_eq!(rows[0]["mu_re"].as_f64().unwrap(), 0.0);
    assert_eq!(rows[0]["mu_im"].as_f64().unwrap(), 1.0);
    let coeffs = rows[0]["coefficients"].as_array().unwrap();
    assert_eq!(coeffs[1][0].as_f64().unwrap(), 0.0);
    assert!((coeffs[1][1].as_f64().unwrap() - 1.0 / 3.0).abs() < 1e-15);
}

#[test]
fn series_intertwined_exp_matches_eigen_series() {
    let eigen = dunkl(&[
        "series", "--m", "3", "--nu", "0.4,0.9", "eigen", "--lambda", "1.2", "--truncation", "12",
    ]);
    let inter = dunkl(&[
        "series",
        "--m",
        "3",
        "--nu",
        "0.4,0.9",
        "intertwined-exp",
        "--lambda",
        "1.2",
        "--truncation",
        "12",
    ]);
    assert_eq!(eigen.status.code(), Some(0));
    assert_eq!(inter.status.code(), Some(0));
    let e = stdout_lines(&eigen);
    let i = stdout_lines(&inter);
    let ec = e[0]["coefficients"].as_array().unwrap();
    let ic = i[0]["coefficients"].as_array().unwrap();
    assert_eq!(ec.len(), ic.len());
    for (a, b) in ec.iter().zip(ic.iter()) {
        let dre = (a[0].as_f64().unwrap() - b[0].as_f64().unwrap()).abs();
        let dim = (a[1].as_f64().unwrap() - b[1].as_f64().unwrap()).abs();
        assert!(dre < 1e-12 && dim < 1e-12);
    }
}

#[test]
fn mu_direct_bypasses_the_rotation_factor() {
    let direct = dunkl(&[
        "series", "--m", "2", "--nu", "0.5", "eigen", "--lambda", "i", "--mu-direct",
        "--truncation", "8",
    ]);
    let viakappa = dunkl(&[
        "series", "--m", "2", "--nu", "0.5", "eigen", "--lambda", "1", "--truncation", "8",
    ]);
    assert_eq!(direct.status.code(), Some(0));
    let d = stdout_lines(&direct);
    let v = stdout_lines(&viakappa);
    // kappa = i at order two, so mu agrees either way
    assert_eq!(d[0]["mu_re"], v[0]["mu_re"]);
    assert_eq!(d[0]["mu_im"], v[0]["mu_im"]);
    assert_eq!(d[0]["coefficients"], v[0]["coefficients"]);
}

#[test]
fn crosscheck_reports_the_constant_ratio() {
    let out = dunkl(&[
        "crosscheck", "--m", "3", "--nu", "0.5,0.9", "--truncation", "36",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let rows = stdout_lines(&out);
    let last = rows.last().unwrap();
    assert_eq!(last["identity"], "rl-constant-ratio");
    assert_eq!(last["pass"], true);
    let status = last["status"].as_str().unwrap();
    assert!(status.contains("ratio"), "status explains the ratio: {status}");
    // the quadrature route must appear alongside the diagonal route
    assert!(rows
        .iter()
        .any(|r| r["identity"] == "rl-quadrature-vs-diagonal"));
}

#[test]
fn eval_row_errors_are_recorded_without_aborting() {
    // index component at a negative integer pole: the series is undefined,
    // but the run still emits one row per grid point
    let out = dunkl(&[
        "eval", "--m", "2", "--nu=-1", "hyperbessel", "--grid", "0:1:0.5",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let rows = stdout_lines(&out);
    assert_eq!(rows.len(), 3);
    for row in &rows {
        assert!(row["status"].is_string(), "row carries the failure: {row}");
        assert!(row.get("value_re").is_none());
    }
}
