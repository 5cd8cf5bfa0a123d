use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn cherednik(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cherednik"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema() -> jsonschema::Validator {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../schema/cherednik-output.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

#[test]
fn divisor_of_d_e_plus() {
    let o = cherednik(&["divisor", "D*e+"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn hilbert_lists_even_dimensions() {
    let o = cherednik(&["hilbert", "--max-degree", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("2,4,6,8,10,12"));
}

#[test]
fn member_refuses_half_dunkl_on_odd_part() {
    let o = cherednik(&["member", "1/2*D*e-"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "refusal: non-integral value at exponent 1");
}

#[test]
fn member_reports_denominator() {
    let o = cherednik(&["member", "1/2*D*e+"]);
    assert_eq!(stdout(&o).trim(), "member; denominator 2");
}

#[test]
fn parse_error_exits_with_two() {
    let o = cherednik(&["normalize", "e+ e-"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("byte 3"), "{err}");
}

#[test]
fn preconditions_exit_with_three() {
    assert_eq!(cherednik(&["divisor", "x^-1"]).status.code(), Some(3));
    assert_eq!(cherednik(&["decompose", "--c", "2", "D*e+"]).status.code(), Some(3));
    assert_eq!(cherednik(&["--c", "1/3", "hilbert"]).status.code(), Some(3));
    assert_eq!(cherednik(&["--c", "0", "--prime", "4", "act", "D"]).status.code(), Some(3));
    assert_eq!(cherednik(&["--prime", "2", "act", "D"]).status.code(), Some(3));
}

#[test]
fn expression_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cherednik"))
        .args(["divisor", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"D^2*e+\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    // D^2 x^2 = 2(1 - 2c)
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn act_prints_images() {
    let o = cherednik(&["--c", "1", "act", "D", "--from", "1", "--to", "2"]);
    // D x = (1 - 2c) = -1 at c = 1, D x^2 = 2x
    assert_eq!(stdout(&o), "x^1 -> -1\nx^2 -> 2*x\n");
}

#[test]
fn mod_p_table() {
    let o = cherednik(&["--c", "0", "--prime", "2", "act", "1/2*D*e+", "--to", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("x^2 -> 1*x^1"), "{text}");
    assert!(text.contains("x^4 -> 0"), "{text}");
}

#[test]
fn decompose_prints_coefficients() {
    let o = cherednik(&["decompose", "D*e+ + c*x*D*e+"]);
    assert_eq!(stdout(&o), "Delta+[0,1]: 2*c\nDelta+[1,0]: 2\n");
}

#[test]
fn abstract_report_flags_only_integer_disagreements() {
    let o = cherednik(&["abstract", "--c-values", "0,1/2", "--samples", "5", "--degree", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("c = 0:"), "{text}");
    assert!(text.contains("(exploration)"), "{text}");
}

#[test]
fn verify_negation_fails_the_suite() {
    let ok = cherednik(&["verify", "--only", "opalgebra"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    let bad = cherednik(&["verify", "--only", "opalgebra", "--negate", "relation_suite"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("FAIL opalgebra::relation_suite"));
}

#[test]
fn json_outputs_match_schema() {
    let v = schema();
    let runs: &[&[&str]] = &[
        &["normalize", "D*x - x*D"],
        &["act", "x*D", "--to", "3"],
        &["--c", "0", "--prime", "3", "act", "1/2*D^2*e+", "--to", "5"],
        &["divisor", "D*e+"],
        &["member", "1/2*D*e+"],
        &["member", "1/2*D*e-"],
        &["basis", "--max-degree", "2"],
        &["decompose", "1/2*x*D*e+"],
        &["hilbert", "--max-degree", "4"],
        &["sl2", "--bound", "2"],
        &["abstract", "--c-values", "-1,1/2", "--samples", "3", "--degree", "2"],
        &["verify", "--only", "sl2"],
        &["--c", "0", "lattice", "--degree", "-2", "--sign", "both", "--max-degree", "4"],
        &["normalize", "e+ e-"],
        &["divisor", "x^-1"],
    ];
    for args in runs {
        let mut full = vec!["--format", "json"];
        full.extend_from_slice(args);
        let o = cherednik(&full);
        let value: Value = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        let errors: Vec<String> = v.iter_errors(&value).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
}

#[test]
fn round_trip_through_normalize() {
    let o = cherednik(&["--format", "json", "normalize", "1/2 * D^2 * e+"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["expression"], "1/2*D^2*e+");
}

#[test]
fn help_goes_to_stdout() {
    let o = cherednik(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("divisor"));
}

#[test]
fn unknown_subcommand_is_a_parse_error() {
    assert_eq!(cherednik(&["frobnicate"]).status.code(), Some(2));
}
