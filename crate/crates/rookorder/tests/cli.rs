//! End-to-end checks of the command-line binary: output shapes, exit codes,
//! size guards, and determinism.

use std::process::{Command, Output};

fn rookorder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rookorder"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn order_pretty_with_specialization() {
    let out = rookorder(&["order", "--word", "XY", "--s", "1", "--q", "1"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out).trim(),
        "(1) Y X + (1 * alpha1) Y + (1 * alpha0)"
    );
}

#[test]
fn order_empty_word_is_identity() {
    let out = rookorder(&["order", "--word", "", "--s", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "(1)");
}

#[test]
fn order_check_reports_equality() {
    let out = rookorder(&["order", "--word", "(Y^2X)^2", "--s", "2", "--check"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("verdict: EQUAL"), "got: {text}");
}

#[test]
fn order_rejects_bad_words_with_exit_2() {
    let out = rookorder(&["order", "--word", "XZ"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("byte 1"), "got: {err}");
}

#[test]
fn order_enforces_length_guard() {
    let out = rookorder(&["order", "--word", "(XY)^8"]);
    assert_eq!(out.status.code(), Some(2));
    let out = rookorder(&["order", "--word", "(XY)^8", "--unsafe-limits"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn order_json_round_trips() {
    let out = rookorder(&["order", "--word", "(YX)^3", "--s", "2", "--format", "json"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let form = rookorder::cli::normal_form_from_json(&json).unwrap();
    let ring = rookorder::coeffring::Ring::new(2);
    let word = rookorder::words::parse_word("(YX)^3").unwrap();
    let direct = rookorder::numbers::combinatorial_normal_form(ring, &word);
    assert_eq!(
        rookorder::rewriter::first_difference(&form, &direct).unwrap(),
        None
    );
}

#[test]
fn table_csv_has_header_and_values() {
    let out = rookorder(&[
        "table",
        "--family",
        "poly-stirling",
        "--s",
        "2",
        "--n",
        "3",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,j,k,coefficient"));
    // the Jordan-type entry (3,4,2) is alpha2 (q + q^2 + q^3)
    let entry = text
        .lines()
        .find(|l| l.starts_with("3,4,2,"))
        .expect("entry (3,4,2) present");
    assert_eq!(
        entry,
        "3,4,2,\"1 * q * alpha2 + 1 * q^2 * alpha2 + 1 * q^3 * alpha2\""
    );
}

#[test]
fn table_rejects_unknown_family() {
    let out = rookorder(&["table", "--family", "fibonacci", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn board_renders_families_and_words() {
    let out = rookorder(&["board", "--word", "X^2YXYX^2Y"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("columns (left to right): [3, 3, 2, 1, 1]"));

    let out = rookorder(&["board", "--family", "lah", "--n", "3", "--format", "json"]);
    assert_eq!(stdout_of(&out).trim(), r#"{"heights":[0,2,4]}"#);

    let out = rookorder(&["board", "--family", "staircase"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn board_overlay_reports_weight() {
    let out = rookorder(&["board", "--word", "X^2YXYX^2Y", "--rooks", "1:1,3:3"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("weight: 1 * q^3 * alpha0^2"), "got: {text}");

    // attacking placements are refused
    let out = rookorder(&["board", "--word", "(YX)^4", "--rooks", "1:1,2:1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_small_suite_passes_and_is_deterministic() {
    let args = [
        "verify",
        "--suite",
        "oracle",
        "--max-len",
        "4",
        "--random-words",
        "10",
        "--seed",
        "42",
    ];
    let first = rookorder(&args);
    assert_eq!(first.status.code(), Some(0));
    let second = rookorder(&args);
    assert_eq!(stdout_of(&first), stdout_of(&second));
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let out = rookorder(&["verify", "--suite", "everything"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_all_suites_pass() {
    let out = rookorder(&["verify", "--suite", "all"]);
    let text = stdout_of(&out);
    assert_eq!(out.status.code(), Some(0), "output:\n{text}");
    assert_eq!(text.matches("PASS").count(), 6, "output:\n{text}");
    assert!(
        text.contains("eulerian closed-form comparison"),
        "output:\n{text}"
    );
}
