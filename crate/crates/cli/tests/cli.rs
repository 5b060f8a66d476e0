//! End-to-end tests of the `qstar` binary: argument handling, exit codes,
//! and output shapes.

use std::process::{Command, Output};

fn qstar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qstar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let out = qstar(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn malformed_state_is_a_usage_error() {
    for bad in ["bloch:a,b,c", "bloch:1,2", "spherical:1,2,3", "polar:x,0,0"] {
        let out = qstar(&["wigner", bad]);
        assert_eq!(out.status.code(), Some(1), "state `{bad}`");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn unphysical_states_exit_with_code_two() {
    let out = qstar(&["wigner", "bloch:1,1,1"]);
    assert_eq!(out.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("Bloch"), "stderr: {msg}");

    let out = qstar(&["wigner", "polar:0.5,0.6,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn wigner_reports_the_north_pole_state() {
    let out = qstar(&["wigner", "bloch:0,0,1", "--variant", "A"]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["command"], "wigner");
    let values = &json["wigner"][0]["values"];
    assert_eq!(values["00"], 0.5);
    assert_eq!(values["01"], 0.5);
    assert_eq!(values["10"], 0.0);
    assert_eq!(values["11"], 0.0);
}

#[test]
fn wigner_defaults_to_both_variants() {
    let out = qstar(&["wigner", "bloch:0,1,0"]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["wigner"].as_array().unwrap().len(), 2);
    assert_eq!(json["wigner"][0]["variant"], "A");
    assert_eq!(json["wigner"][1]["variant"], "B");
    assert_eq!(json["wigner"][1]["values"]["00"], 0.5);
}

#[test]
fn matrix_files_parse_and_validate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("state.json");
    std::fs::write(
        &path,
        r#"{"dim": 2, "re": [[0.5, 0.0], [0.0, 0.5]], "im": [[0.0, 0.0], [0.0, 0.0]]}"#,
    )
    .unwrap();
    let spec = format!("matrix:@{}", path.display());
    let out = qstar(&["wigner", &spec]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["wigner"][0]["values"]["00"], 0.25);

    // Trace 2: rejected as unphysical.
    let bad_path = dir.path().join("bad.json");
    std::fs::write(
        &bad_path,
        r#"{"dim": 2, "re": [[1.0, 0.0], [0.0, 1.0]], "im": [[0.0, 0.0], [0.0, 0.0]]}"#,
    )
    .unwrap();
    let spec = format!("matrix:@{}", bad_path.display());
    let out = qstar(&["wigner", &spec]);
    assert_eq!(out.status.code(), Some(2));

    let out = qstar(&["wigner", "matrix:@/nonexistent/state.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn tomogram_csv_covers_the_grid() {
    let out = qstar(&["tomogram", "bloch:0,0,0", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "m,theta,psi,w");
    // Two projections over the default 3x8 grid.
    assert_eq!(lines.len(), 1 + 2 * 24);
    for line in &lines[1..] {
        let w: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
        assert!((w - 0.5).abs() <= 1e-14);
    }
}

#[test]
fn tomogram_grid_flags_change_the_node_count() {
    let out = qstar(&["tomogram", "bloch:0,0,1", "--ntheta", "2", "--npsi", "5", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1 + 2 * 10);
}

#[test]
fn kernels_csv_has_full_and_filtered_tables() {
    let out = qstar(&["kernels", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "variant,dual,m,theta,psi,j,k,value");
    // 2 variants x 2 dualities x 2 projections x 24 nodes x 4 points.
    assert_eq!(lines.len(), 1 + 768);

    let out = qstar(&["kernels", "--variant", "B", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1 + 384);
    assert!(text.lines().skip(1).all(|l| l.starts_with("B,")));
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = qstar(&["wigner", "bloch:0,0,0", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(json["wigner"][0]["values"]["11"], 0.25);
}

#[test]
fn roundtrip_reports_a_tiny_residual() {
    let out = qstar(&["roundtrip", "bloch:0.3,0.2,0.1"]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    let residual = json["max_residual"].as_f64().unwrap();
    assert!(residual <= 1e-10);
}

#[test]
fn roundtrip_honors_variant_and_grid_flags() {
    let out = qstar(&[
        "roundtrip",
        "polar:0.7,0.2,1.1",
        "--variant",
        "B",
        "--ntheta",
        "2",
        "--npsi",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["variant"], "B");
    assert_eq!(json["ntheta"], 2);
    assert!(json["max_residual"].as_f64().unwrap() <= 1e-10);
}

#[test]
fn roundtrip_rejects_an_inexact_grid() {
    let out = qstar(&["roundtrip", "bloch:0,0,1", "--ntheta", "1", "--npsi", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("exactness"), "stderr: {msg}");
}
