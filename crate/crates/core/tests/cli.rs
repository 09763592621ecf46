//! The `vrtta` binary: exit codes, formats, determinism.

use std::process::{Command, Output};

fn vrtta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vrtta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = vrtta(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn code(args: &[&str]) -> i32 {
    vrtta(args).status.code().expect("exit code")
}

#[test]
fn pi_csv_lists_virasena_at_seven_digits() {
    let out = stdout(&["pi", "--digits", "7", "--format", "csv"]);
    assert!(out.starts_with("method_id,tradition,exact_form,value,rel_error,digits_correct\n"));
    assert!(
        out.lines()
            .any(|l| l.starts_with("virasena,") && l.contains(",3.1415929,")),
        "{out}"
    );
    // the CSV carries ASCII radicals only
    assert!(!out.contains('√'));
    assert!(out.contains("54-36*sqrt(2)") || out.contains("sqrt(2)"));
}

#[test]
fn pi_at_one_digit_is_still_sorted() {
    let out = stdout(&["pi", "--digits", "1", "--format", "csv"]);
    let ids: Vec<&str> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(ids.first(), Some(&"vedic_pit"));
    assert_eq!(ids.last(), Some(&"madhava_series_50"));
}

#[test]
fn pi_json_parses() {
    let out = stdout(&["pi", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rows = rows.as_array().unwrap();
    assert!(rows.len() >= 11);
    assert!(rows
        .iter()
        .all(|r| r["method_id"].is_string() && r["rel_error"].is_string()));
}

#[test]
fn construct_examples() {
    let out = stdout(&["construct", "--method", "baudhayana", "--side", "1"]);
    assert!(out.contains("radius = (2+√2)/6\n"));
    assert!(out.contains("area_ratio ≈ 1.01725"));

    let out = stdout(&["construct", "--method", "maitrayaniya", "--side", "16"]);
    assert!(out.contains("radius = 9\n"), "{out}");

    // (186+24√17)/225 in lowest terms
    let out = stdout(&["construct", "--method", "manava", "--side", "2"]);
    assert!(out.contains("radius_squared = (62+8√17)/75\n"), "{out}");

    let out = stdout(&[
        "construct",
        "--method",
        "manava",
        "--side",
        "2",
        "--format",
        "csv",
    ]);
    assert!(out.contains("(62+8*sqrt(17))/75"), "{out}");
}

#[test]
fn decimal_and_fraction_sides_agree() {
    let a = stdout(&["construct", "--method", "baudhayana", "--side", "0.5"]);
    let b = stdout(&["construct", "--method", "baudhayana", "--side", "1/2"]);
    assert_eq!(a, b);
}

#[test]
fn sine_table_csv() {
    let out = stdout(&["sine", "--table", "3438", "--format", "csv"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 25);
    assert_eq!(lines[1], "1,225,225,225");
    assert_eq!(lines[24], "24,5400,3438,7");
}

#[test]
fn arc_is_a_sixth_of_the_circumference_at_half_diameter() {
    let out = stdout(&["arc", "--c", "1", "--d", "2"]);
    assert!(out.contains("arc_over_p = 1/6\n"));
    assert!(out.contains("arc_decimal ≈ 1.047197551196598"));
    let out = stdout(&["arc", "--c", "2", "--d", "2", "--p", "6"]);
    assert!(out.contains("arc = 3\n"));
}

#[test]
fn kerala_fifty_terms() {
    let out = stdout(&["kerala", "--n", "50"]);
    assert!(out.contains("digits_correct: 11\n"), "{out}");
    let trace = stdout(&["kerala", "--n", "5", "--trace", "--format", "csv"]);
    assert_eq!(trace.lines().count(), 6);
}

#[test]
fn doubling_modes() {
    let out = stdout(&["doubling", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["perimeter"], "62831");

    let out = stdout(&["doubling", "--high-precision", "--digits", "10"]);
    assert!(out.contains("ratio ≈ 3.1415576079"), "{out}");

    let out = stdout(&["doubling", "--search", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["runs"], 2187);
    assert!(!v["hits"].as_array().unwrap().is_empty());

    let out = stdout(&["doubling", "--trace", "--format", "csv"]);
    assert_eq!(out.lines().count(), 8);
}

#[test]
fn small_commands() {
    assert!(stdout(&["jambudvipa"]).contains("circumference = 316227\n"));
    assert!(stdout(&["isqrt", "99", "--mode", "nearest"]).contains("isqrt = 10\n"));
    assert!(
        stdout(&["perpendicular", "--offset", "1", "--radius", "sqrt(2)"])
            .contains("perpendicular: true")
    );
    assert!(stdout(&["segment", "--d", "2", "--h", "1"]).contains("arc = √10\n"));
    assert!(stdout(&["sine", "--theta", "30"]).contains("bhaskara1 = 1/2\n"));
    assert!(stdout(&["sqrt2"]).contains("577/408"));
    assert!(stdout(&["square"]).contains("ratio = 9785/11136\n"));
    assert!(stdout(&["virasena"]).contains("355/113"));
}

#[test]
fn scans_cover_the_grid() {
    let out = stdout(&[
        "scan",
        "segment",
        "--formula",
        "sridhara-area",
        "--format",
        "csv",
    ]);
    assert_eq!(out.lines().count(), 181);
    assert!(out.lines().last().unwrap().starts_with("180,"));
    let out = stdout(&[
        "scan", "sine", "--from", "10", "--to", "170", "--format", "csv",
    ]);
    assert!(out.lines().last().unwrap().starts_with("max,"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["pi"]), 0);
    assert_eq!(code(&[]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["pi", "--digits", "many"]), 2);
    assert_eq!(
        code(&["construct", "--method", "baudhayana", "--side", "1/0"]),
        2
    );
    assert_eq!(
        code(&["construct", "--method", "baudhayana", "--side", "one"]),
        2
    );
    assert_eq!(code(&["sine"]), 2);
    assert_eq!(code(&["segment", "--d", "2", "--c", "1", "--h", "1"]), 2);
    assert_eq!(
        code(&["construct", "--method", "baudhayana", "--side", "0"]),
        3
    );
    assert_eq!(code(&["pi", "--digits", "60"]), 3);
    assert_eq!(code(&["segment", "--d", "2", "--h", "3"]), 3);
    assert_eq!(code(&["doubling", "--diameter", "7"]), 3);
    assert_eq!(code(&["sine", "--table", "3438", "--entries", "7"]), 3);
    assert_eq!(
        code(&["perpendicular", "--offset", "2", "--radius", "1"]),
        3
    );
}

#[test]
fn errors_go_to_stderr() {
    let out = vrtta(&["construct", "--method", "baudhayana", "--side", "0"]);
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["pi", "--format", "csv"][..],
        &["pi", "--format", "json"],
        &[
            "scan",
            "segment",
            "--formula",
            "mahavira-area",
            "--format",
            "csv",
        ],
        &["scan", "sine", "--format", "csv"],
        &["doubling", "--search", "--format", "csv"],
    ] {
        assert_eq!(vrtta(args).stdout, vrtta(args).stdout, "{args:?}");
    }
}
