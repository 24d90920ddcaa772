//! Plumbing tests: config files, flag overrides, output files and the parse
//! and precondition error paths not covered by the acceptance gate.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_ncqm-lab");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn temp_path(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("ncqm-lab-test-{}-{name}", std::process::id()));
    path
}

#[test]
fn config_file_drives_the_run_and_flags_override_it() {
    let path = temp_path("config.json");
    fs::write(&path, r#"{"seed": 7, "sweeps": {"group_triples": 11}}"#).unwrap();
    let cfg = path.to_str().unwrap();

    let from_file = run(&["verify", "group", "--config", cfg]);
    assert_eq!(from_file.status.code(), Some(0));
    let text = String::from_utf8(from_file.stdout).unwrap();
    assert!(text.contains("\"seed\": 7"), "config seed not applied:\n{text}");
    assert!(text.contains("\"group_triples\": 11"), "config sweeps not applied");

    let overridden = run(&["verify", "group", "--config", cfg, "--seed", "8"]);
    let text = String::from_utf8(overridden.stdout).unwrap();
    assert!(text.contains("\"seed\": 8"), "flag did not override the config seed");

    fs::remove_file(&path).ok();
}

#[test]
fn malformed_config_is_a_parse_error() {
    let path = temp_path("broken.json");
    fs::write(&path, "{not json").unwrap();
    let out = run(&["verify", "group", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    fs::remove_file(&path).ok();

    let missing = run(&["verify", "group", "--config", "/no/such/file.json"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn out_flag_writes_the_same_bytes_as_stdout() {
    let path = temp_path("report.json");
    let out = run(&["verify", "group", "--seed", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let written = fs::read(&path).unwrap();
    assert_eq!(written, out.stdout);
    fs::remove_file(&path).ok();
}

#[test]
fn suite_flag_form_matches_the_positional_form() {
    let positional = run(&["verify", "reps", "--seed", "3"]);
    let flagged = run(&["verify", "--suite", "reps", "--seed", "3"]);
    assert_eq!(positional.status.code(), Some(0));
    assert_eq!(positional.stdout, flagged.stdout);
}

#[test]
fn torus_rejects_malformed_and_invalid_specs() {
    let garbled = run(&["torus", "{\"family\":\"NoSuchFamily\"}"]);
    assert_eq!(garbled.status.code(), Some(2));

    let invalid = run(&["torus", r#"{"family":"Generic4D","rho":0.0,"sigma":1.0,"tau":1.0}"#]);
    assert_eq!(invalid.status.code(), Some(3));
}

#[test]
fn torus_runs_a_valid_spec() {
    let out = run(&["torus", r#"{"family":"TauZero4D","rho":0.25,"sigma":0.4}"#, "--packets", "2"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"case\": \"TauZero4D\""));
    assert!(text.contains("\"pass\": true"));
}

#[test]
fn gauge_scan_needs_a_member_off_the_singular_locus() {
    // at alpha = beta = gamma = 1 the symmetric member itself is singular,
    // so the default l cannot be derived
    let default_l = run(&["gauge-scan", "--alpha", "1", "--beta", "1", "--gamma", "1"]);
    assert_eq!(default_l.status.code(), Some(3));

    let explicit = run(&["gauge-scan", "--alpha", "1", "--beta", "1", "--gamma", "1", "--l", "2.0"]);
    assert_eq!(explicit.status.code(), Some(0));
    let text = String::from_utf8(explicit.stdout).unwrap();
    assert!(text.contains("\"curl\": 1.0"));
}

#[test]
fn gauge_scan_accepts_negative_slopes_and_fields() {
    let out = run(&["gauge-scan", "--m-values", "-1,0.5,2", "--l", "-0.25", "--field-b", "-2.0"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"m\": -1.0"));
    assert!(text.contains("\"curl\": -2.0"));
}

#[test]
fn inconsistent_cone_points_are_a_precondition_violation() {
    // invariants land inside the cone tolerance band while the slope
    // cross-check fails by six orders of magnitude
    let out = run(&[
        "classify",
        "[0, 0, 0, 0, 1e-6, 1e-7, 1e-7]",
        "--alpha",
        "1",
        "--beta",
        "1",
        "--gamma",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(3), "stderr: {}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn unknown_suites_and_flags_are_usage_errors() {
    assert_eq!(run(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "group", "--no-such-flag"]).status.code(), Some(2));
}

#[test]
fn nonpositive_overrides_violate_preconditions() {
    assert_eq!(run(&["verify", "group", "--alpha=-1"]).status.code(), Some(3));
    assert_eq!(run(&["verify", "group", "--tol-unitarity", "0"]).status.code(), Some(3));
}
