//! End-to-end tests of the `heisrep` binary: flag handling, exit codes, and
//! the construct -> file -> verify round trip.

use std::path::PathBuf;
use std::process::{Command, Output};

fn heisrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heisrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn temp_file(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("heisrep-test-{}-{name}", std::process::id()));
    std::fs::write(&path, content).expect("temp file writes");
    path
}

#[test]
fn construct_text_matches_the_canonical_pattern() {
    let out = heisrep(&[
        "construct",
        "--m",
        "1",
        "--n",
        "0",
        "--a",
        "1",
        "--b",
        "1",
        "--variant",
        "nil",
        "--format",
        "text",
    ]);
    assert!(out.status.success());
    let grid: Vec<Vec<String>> = stdout(&out)
        .lines()
        .map(|l| l.split_whitespace().map(str::to_string).collect())
        .collect();
    assert_eq!(
        grid,
        vec![
            vec!["0".to_string(), "x_1".to_string(), "z".to_string()],
            vec!["0".to_string(), "0".to_string(), "y_1".to_string()],
            vec!["0".to_string(), "0".to_string(), "0".to_string()],
        ]
    );
}

#[test]
fn construct_latex_emits_a_pmatrix() {
    let out = heisrep(&[
        "construct",
        "--m",
        "2",
        "--n",
        "4",
        "--a",
        "2",
        "--b",
        "3",
        "--format",
        "latex",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("\\begin{pmatrix}"));
    assert!(text.contains("a_{3} & a_{4}"));
}

#[test]
fn construct_verify_round_trip_exits_zero() {
    let out = heisrep(&[
        "construct",
        "--m",
        "2",
        "--n",
        "4",
        "--a",
        "2",
        "--b",
        "3",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let path = temp_file("roundtrip.json", &stdout(&out));
    let verify = heisrep(&["verify", "--file", path.to_str().unwrap()]);
    assert_eq!(verify.status.code(), Some(0), "{}", stdout(&verify));
    let report: serde_json::Value = serde_json::from_str(&stdout(&verify)).unwrap();
    assert_eq!(report.as_array().unwrap().len(), 5);
    assert!(report.as_array().unwrap().iter().all(|r| r["pass"] == true));
    std::fs::remove_file(path).ok();
}

#[test]
fn verify_nil_fails_on_the_scalar_family() {
    let out = heisrep(&[
        "construct",
        "--m",
        "1",
        "--n",
        "1",
        "--a",
        "1",
        "--b",
        "1",
        "--variant",
        "scalar",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let path = temp_file("scalar.json", &stdout(&out));
    let verify = heisrep(&[
        "verify",
        "--file",
        path.to_str().unwrap(),
        "--checks",
        "nil",
    ]);
    assert_eq!(verify.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&stdout(&verify)).unwrap();
    assert_eq!(report[0]["check"], "nil");
    assert_eq!(report[0]["pass"], false);
    std::fs::remove_file(path).ok();
}

#[test]
fn verify_truncated_file_exits_two_with_json_report() {
    let out = heisrep(&[
        "construct",
        "--m",
        "1",
        "--n",
        "0",
        "--a",
        "1",
        "--b",
        "1",
        "--format",
        "json",
    ]);
    let text = stdout(&out);
    let path = temp_file("truncated.json", &text[..text.len() / 2]);
    let verify = heisrep(&["verify", "--file", path.to_str().unwrap()]);
    assert_eq!(verify.status.code(), Some(2));
    let report: serde_json::Value = serde_json::from_str(&stdout(&verify)).unwrap();
    assert_eq!(report[0]["check"], "parse");
    std::fs::remove_file(path).ok();
}

#[test]
fn verify_missing_file_exits_two_with_json_report() {
    let verify = heisrep(&["verify", "--file", "/nonexistent/heisrep.json"]);
    assert_eq!(verify.status.code(), Some(2));
    let report: serde_json::Value = serde_json::from_str(&stdout(&verify)).unwrap();
    assert_eq!(report[0]["pass"], false);
}

#[test]
fn verify_precondition_exits_three() {
    // Zero representation of a non-nilpotent algebra: the center criterion
    // must refuse rather than answer.
    let rep = serde_json::json!({
        "algebra": {
            "dim": 2,
            "basis": ["e_1", "e_2"],
            "brackets": [ { "i": 0, "j": 1, "coeffs": { "1": "1" } } ]
        },
        "space_dim": 1,
        "matrices": [ [["0"]], [["0"]] ]
    });
    let path = temp_file("nonnilpotent.json", &rep.to_string());
    let verify = heisrep(&[
        "verify",
        "--file",
        path.to_str().unwrap(),
        "--checks",
        "faithful-center",
    ]);
    assert_eq!(verify.status.code(), Some(3), "{}", stdout(&verify));
    std::fs::remove_file(path).ok();
}

#[test]
fn construct_invalid_parameters_exit_two() {
    let out = heisrep(&["construct", "--m", "1", "--n", "0", "--variant", "scalar"]);
    assert_eq!(out.status.code(), Some(2));
    let out = heisrep(&["construct", "--m", "1", "--n", "1", "--format", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mu_single_and_table_output() {
    let out = heisrep(&["mu", "--m", "2", "--n", "4", "--format", "csv"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("2,4,6,7,2,1,2x3,2x2"));

    let out = heisrep(&["mu", "--m-max", "0", "--n-max", "3", "--format", "csv"]);
    assert!(out.status.success());
    let nil_column: Vec<String> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(3).unwrap().to_string())
        .collect();
    assert_eq!(nil_column, vec!["2", "3", "4", "4"]);

    // Mixed flag sets are a usage error.
    let out = heisrep(&["mu", "--m", "2", "--n-max", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn selftest_quick_passes_and_reports_seed() {
    let out = heisrep(&["selftest", "--level", "quick", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("seed: 42"));
}

#[test]
fn selftest_seed_env_fallback_and_flag_precedence() {
    let out = Command::new(env!("CARGO_BIN_EXE_heisrep"))
        .args(["selftest", "--level", "quick"])
        .env("HEISREP_SEED", "7")
        .output()
        .expect("binary runs");
    assert!(String::from_utf8_lossy(&out.stdout).contains("seed: 7"));

    let out = Command::new(env!("CARGO_BIN_EXE_heisrep"))
        .args(["selftest", "--level", "quick", "--seed", "9"])
        .env("HEISREP_SEED", "7")
        .output()
        .expect("binary runs");
    assert!(String::from_utf8_lossy(&out.stdout).contains("seed: 9"));
}
