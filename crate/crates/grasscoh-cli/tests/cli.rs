//! End-to-end tests of the binary: golden JSON bytes, exit codes, and the
//! external-profile path of the splitting checker.

use std::io::Write;
use std::process::{Command, Output};

fn grasscoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grasscoh"))
        .args(args)
        .env_remove("GRASSCOH_WINDOW")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn coh_json_is_golden_and_deterministic() {
    let args = ["coh", "Q*Sd", "--twists", "-3..1", "--json"];
    let first = grasscoh(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(
        stdout(&first),
        "{\"bundle\":\"Q*Sd\",\"entries\":[[0,1,45],[1,-1,1]]}\n"
    );
    let second = grasscoh(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn lreg_prints_the_twist_law_value() {
    let output = grasscoh(&["lreg", "O(2)"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("Lreg(O(2)) = -2"));
}

#[test]
fn chi_of_the_pluecker_line_bundle() {
    let output = grasscoh(&["chi", "O(1)", "--twists", "0..0", "--json"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "{\"bundle\":\"O(1)\",\"chi\":[[0,10]]}\n");
}

#[test]
fn parse_errors_exit_2_with_position() {
    let output = grasscoh(&["coh", "Q + + S"]);
    assert_eq!(output.status.code(), Some(2));
    let err = String::from_utf8_lossy(&output.stderr);
    assert!(err.contains("parse error at byte 4"), "{err}");
}

#[test]
fn inner_exit_codes_follow_the_verdict() {
    assert_eq!(grasscoh(&["inner", "Q"]).status.code(), Some(0));
    assert_eq!(grasscoh(&["inner", "Sym^2 Q"]).status.code(), Some(1));
}

#[test]
fn sequences_json_is_deterministic_and_reports_the_repair() {
    let args = ["sequences", "--json"];
    let first = grasscoh(&args);
    assert_eq!(first.status.code(), Some(0));
    let second = grasscoh(&args);
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    assert!(text.contains("\"label\":\"koz-printed\""));
    let rows: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    let rows = rows.as_array().unwrap();
    // 9 labels x 25 twists x 1 probe
    assert_eq!(rows.len(), 9 * 25);
    let nonzero: Vec<_> = rows
        .iter()
        .filter(|row| row["alternating_sum"].as_i64() != Some(0))
        .collect();
    assert!(!nonzero.is_empty());
    assert!(nonzero
        .iter()
        .all(|row| row["label"] == "koz-printed"));
}

#[test]
fn split_classifies_an_external_profile() {
    let x = grasscoh::bundle::BundleExpr::line(0) + grasscoh::bundle::BundleExpr::line(2);
    let json = grasscoh::regularity::external_profile_json(
        &x,
        &grasscoh::regularity::splitting_required_cells(),
    );
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(json.as_bytes()).unwrap();
    let path = file.path().to_str().unwrap().to_owned();
    let output = grasscoh(&["split", &path, "--json"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("\"verdict\":\"split-as-O-plus-O(a)\""));
}

#[test]
fn split_reports_missing_cells() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(br#"{"rank":2,"cells":[["O",1,-1,0]]}"#).unwrap();
    let path = file.path().to_str().unwrap().to_owned();
    let output = grasscoh(&["split", &path]);
    assert_eq!(output.status.code(), Some(2));
    let err = String::from_utf8_lossy(&output.stderr);
    assert!(err.contains("missing cell"), "{err}");
}

#[test]
fn monads_search_is_empty_for_both_ranks() {
    for rank in ["2", "3"] {
        let output = grasscoh(&["monads", "--rank", rank, "--max-twist", "2", "--max-counts", "2"]);
        assert_eq!(output.status.code(), Some(0), "rank {rank}");
        assert!(stdout(&output).contains("0 feasible"));
    }
}

#[test]
fn narrow_window_warns() {
    let output = grasscoh(&["--window", "-4..4", "chi", "O"]);
    assert_eq!(output.status.code(), Some(0));
    let err = String::from_utf8_lossy(&output.stderr);
    assert!(err.contains("warning"), "{err}");
}

#[test]
fn window_env_var_is_honored() {
    let output = Command::new(env!("CARGO_BIN_EXE_grasscoh"))
        .args(["chi", "O", "--json"])
        .env("GRASSCOH_WINDOW", "0..1")
        .output()
        .expect("binary runs");
    assert_eq!(stdout(&output), "{\"bundle\":\"O\",\"chi\":[[0,1],[1,10]]}\n");
}

#[test]
fn verify_paper_passes() {
    let output = grasscoh(&["verify-paper"]);
    assert_eq!(output.status.code(), Some(0), "{}", stdout(&output));
    let text = stdout(&output);
    assert!(text.contains("RESULT: 11/11 checks passed"), "{text}");
}
