//! Black-box checks of the binary: flags, exit codes, output formats.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hillspec"))
}

fn repo_file(rel: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../..").join(rel)
}

#[test]
fn spectrum_mathieu_per_plus() {
    let out = bin()
        .args(["spectrum", "--bc", "per+", "--n-max", "5", "--potential"])
        .arg(repo_file("potentials/mathieu.json"))
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 11);
    for d in v["cross_agreement"].as_array().unwrap() {
        assert!(d.as_f64().unwrap() < 1e-6);
    }
}

#[test]
fn spectrum_csv_format() {
    let out = bin()
        .args(["spectrum", "--bc", "dir", "--n-max", "3", "--format", "csv"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "index,re,im,residual");
    // v = 0 Dirichlet: 1, 4, 9
    for want in [1.0, 4.0, 9.0] {
        let line = lines.next().unwrap();
        let re: f64 = line.split(',').nth(1).unwrap().parse().unwrap();
        assert!((re - want).abs() < 1e-9, "{line}");
    }
    assert!(text.contains('e') && !text.contains('E'));
}

#[test]
fn localize_sawtooth_dirichlet() {
    let out = bin()
        .args(["localize", "--N", "8", "--bc", "dir", "--potential"])
        .arg(repo_file("potentials/sawtooth.json"))
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], serde_json::Value::Bool(true));
    for (_, c) in v["disk_counts"].as_object().unwrap() {
        assert_eq!(c.as_u64(), Some(1));
    }
}

#[test]
fn validate_free_potential_exits_zero() {
    let out = bin().arg("validate").output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], serde_json::Value::Bool(true));
}

#[test]
fn gaps_csv_header() {
    let out = bin().args(["gaps", "--n-max", "3", "--format", "csv"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with(
        "n,re_lambda_minus,im_lambda_minus,re_lambda_plus,im_lambda_plus,re_mu,im_mu,gamma,dev,Delta_n"
    ));
}

#[test]
fn bad_potential_file_exits_two() {
    let dir = std::env::temp_dir().join("hillspec_cli_bad.json");
    std::fs::write(&dir, "{\"C_re\": 0.0, \"C_im\": 0.0, \"coeffs\": [{\"k\": 3, \"re\": 1.0, \"im\": 0.0}]}")
        .unwrap();
    let out = bin().args(["spectrum", "--potential"]).arg(&dir).output().unwrap();
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn missing_file_exits_two() {
    let out = bin()
        .args(["spectrum", "--potential", "/nonexistent/v.json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_bc_flag_rejected() {
    let out = bin().args(["spectrum", "--bc", "theta=7"]).output().unwrap();
    assert!(!out.status.success());
}
