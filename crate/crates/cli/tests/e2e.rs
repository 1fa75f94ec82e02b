//! End-to-end checks of the binary: exit codes, printed polynomials, and
//! report determinism, all through the real process boundary.

use std::path::Path;
use std::process::{Command, Output};

fn regdet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regdet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_line(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).trim().to_string()
}

fn write_matrix(path: &Path, text: &str) {
    std::fs::write(path, text).unwrap();
}

#[test]
fn show_prints_the_exact_polynomials() {
    let out = regdet(&["show", "xm", "--m", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout_line(&out), "-1 ab");

    let out = regdet(&["show", "zm", "--m", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout_line(&out), "-1/2 ab + 1/2 ba");

    // The correction vanishes identically at order one.
    let out = regdet(&["show", "xm", "--m", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout_line(&out), "0");

    // The (1,1) block carries the whole of Z_3.
    let out = regdet(&["show", "zk", "--grade", "1,1"]);
    assert!(out.status.success());
    assert_eq!(stdout_line(&out), "-1/2 ab + 1/2 ba");
}

#[test]
fn usage_errors_exit_two() {
    // zk without its grade.
    let out = regdet(&["show", "zk"]);
    assert_eq!(out.status.code(), Some(2));

    // Unknown selector is a clap-level usage error.
    let out = regdet(&["show", "wm", "--m", "2"]);
    assert_eq!(out.status.code(), Some(2));

    // Malformed grade.
    let out = regdet(&["show", "zk", "--grade", "one,two"]);
    assert_eq!(out.status.code(), Some(2));

    // m = 0 is outside every contract.
    let out = regdet(&["show", "xm", "--m", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn detm_cross_paths_agree_on_a_scalar() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("one.json");
    write_matrix(&path, r#"{"dim":1,"data":[[1.0,0.0]]}"#);

    let out = regdet(&["detm", "--input", path.to_str().unwrap(), "--m", "2"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_line(&out)).unwrap();
    let reg = report["value_regularized"][0].as_f64().unwrap();
    assert!((reg - 0.7357588823428847).abs() < 1e-10);
    let spectral = report["value_spectral"][0].as_f64().unwrap();
    assert!((spectral - 0.7357588823428847).abs() < 1e-10);
    assert!(report["cross_path_spread"].as_f64().unwrap() < 1e-10);
    // Operator norm is exactly 1: the series route must not be reported.
    assert!(report.get("value_logseries").is_none());
}

#[test]
fn detm_zero_matrix_is_one_on_all_paths() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zero.json");
    write_matrix(
        &path,
        r#"{"dim":2,"data":[[0.0,0.0],[0.0,0.0],[0.0,0.0],[0.0,0.0]]}"#,
    );
    let out = regdet(&["detm", "--input", path.to_str().unwrap(), "--m", "3"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_line(&out)).unwrap();
    for key in ["value_regularized", "value_spectral", "value_logseries"] {
        assert!(
            (report[key][0].as_f64().unwrap() - 1.0).abs() < 1e-12,
            "{key}"
        );
        assert!(report[key][1].as_f64().unwrap().abs() < 1e-12, "{key}");
    }
}

#[test]
fn numerical_breakdown_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.json");
    write_matrix(&path, r#"{"dim":1,"data":[[1.5,0.0]]}"#);
    let out = regdet(&[
        "detm",
        "--input",
        path.to_str().unwrap(),
        "--m",
        "2",
        "--method",
        "series",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("log-series requires norm < 1"),
        "stderr: {err}"
    );
}

#[test]
fn malformed_matrix_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");

    write_matrix(&path, "not json at all");
    let out = regdet(&["detm", "--input", path.to_str().unwrap(), "--m", "2"]);
    assert_eq!(out.status.code(), Some(2));

    // Wrong entry count for the declared dimension.
    write_matrix(&path, r#"{"dim":2,"data":[[1.0,0.0]]}"#);
    let out = regdet(&["detm", "--input", path.to_str().unwrap(), "--m", "2"]);
    assert_eq!(out.status.code(), Some(2));

    // Missing file.
    let out = regdet(&["detm", "--input", "/nonexistent/m.json", "--m", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verification_suites_pass_and_reports_are_deterministic() {
    let out = regdet(&["symbolic", "verify", "--max-m", "3"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_line(&out)).unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["pass"], true);
    assert!(report["cases"].as_array().unwrap().len() >= 12);

    let dir = tempfile::tempdir().unwrap();
    let (p1, p2) = (dir.path().join("r1.json"), dir.path().join("r2.json"));
    let args = |p: &Path| {
        vec![
            "numeric".to_string(),
            "verify".to_string(),
            "--dim".to_string(),
            "3".to_string(),
            "--max-m".to_string(),
            "2".to_string(),
            "--trials".to_string(),
            "2".to_string(),
            "--json".to_string(),
            p.to_str().unwrap().to_string(),
        ]
    };
    let run1 = Command::new(env!("CARGO_BIN_EXE_regdet"))
        .args(args(&p1))
        .output()
        .unwrap();
    assert!(run1.status.success());
    let run2 = Command::new(env!("CARGO_BIN_EXE_regdet"))
        .args(args(&p2))
        .output()
        .unwrap();
    assert!(run2.status.success());

    let strip = |p: &Path| -> String {
        std::fs::read_to_string(p)
            .unwrap()
            .lines()
            .filter(|l| !l.contains("\"elapsed\""))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&p1), strip(&p2));
}

#[test]
fn thread_bound_is_accepted() {
    let out = regdet(&[
        "--threads",
        "2",
        "numeric",
        "verify",
        "--dim",
        "2",
        "--max-m",
        "2",
        "--trials",
        "1",
    ]);
    assert!(out.status.success());
}
