mod common;

use std::io::Write;
use std::process::{Command, Stdio};

use bettikit::cli::{run, CliConfig};
use clap::Parser;
use common::{EXAMPLE1, EXAMPLE3};
use serde_json::Value;

fn invoke(args: &[&str], input: &str) -> (i32, Value) {
    let config = CliConfig::try_parse_from(std::iter::once("bettikit").chain(args.iter().copied())).unwrap();
    let out = run(&config, input.as_bytes());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = if stdout.is_empty() { Value::Null } else { serde_json::from_str(&stdout).unwrap() };
    (out.code, json)
}

fn binary(args: &[&str], input: &str, env: Option<(&str, &str)>) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_bettikit"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    cmd.env_remove("BETTI_DECIMAL_DIGITS");
    if let Some((k, v)) = env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn coeffs_on_example_three() {
    let (code, json) = invoke(&["coeffs", "--l", "2"], EXAMPLE3);
    assert_eq!(code, 0);
    assert_eq!(json["coefficients"], serde_json::json!(["26", "65", "68"]));
    assert_eq!(json["routes_agree"], true);
}

#[test]
fn e1_bound_on_example_one() {
    let (code, json) = invoke(&["bound", "--e1"], EXAMPLE1);
    assert_eq!(code, 0);
    assert_eq!(json["bound"], "875/8");
    assert_eq!(json["decimal"], "109.375");
    assert_eq!(json["holds"], true);
    assert_eq!(json["e_value"], "90");
}

#[test]
fn sym_decompose_koszul_three() {
    let (_, koszul) = invoke(&["koszul", "3"], "");
    let (code, json) = invoke(&["sym-decompose", "--format", "json"], &koszul.to_string());
    assert_eq!(code, 0);
    assert_eq!(json["N"], 3);
    assert_eq!(json["parts"], serde_json::json!([{"r": "3", "d": [0, 1, 2, 3]}]));
}

#[test]
fn verify_passes_on_examples() {
    for text in [EXAMPLE1, EXAMPLE3] {
        let (code, json) = invoke(&["verify"], text);
        assert_eq!(code, 0, "{json}");
        assert_eq!(json["passed"], true);
        assert!(json["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
        assert_eq!(json["violations"], serde_json::json!([]));
    }
}

#[test]
fn verify_flags_a_failing_bound_with_exit_two() {
    // complete intersection of degrees 2 and 3
    let (code, json) = invoke(&["verify"], "0: 1 . .\n1: . 1 .\n2: . 1 1\n");
    assert_eq!(code, 2);
    assert_eq!(json["passed"], false);
}

#[test]
fn ej_bound_reports_conjectural() {
    let (code, json) = invoke(&["bound", "--ej", "2"], EXAMPLE3);
    assert_eq!(code, 0);
    assert_eq!(json["conjectural"], true);
    assert_eq!(json["e_value"], "68");
    assert_eq!(json["holds"], true);
}

#[test]
fn fuzz_exit_codes() {
    let (code, json) = invoke(&["fuzz", "--s-max", "3", "--ds-max", "8", "--check", "lemma", "--check", "conj"], "");
    assert_eq!(code, 0, "conjecture findings never fail the run");
    assert_eq!(json["theorem_violations"], 0);
    let (code, json) = invoke(&["fuzz", "--s-max", "3", "--ds-max", "8", "--check", "prop"], "");
    assert_eq!(code, 2);
    assert_eq!(json["theorem_violations"], 3);
    let (code, _) = invoke(&["fuzz", "--s-max", "9"], "");
    assert_eq!(code, 1, "guardrail refusal");
}

#[test]
fn input_errors_exit_one() {
    let (code, _, err) = binary(&["coeffs"], "0: 1 2\n1: . -1\n", None);
    assert_eq!(code, 1);
    assert!(err.starts_with("error:"), "{err}");
    let (code, _, err) = binary(&["decompose"], "0: 1 2 1\nx: 1\n", None);
    assert_eq!(code, 1);
    assert!(err.contains("line 2"), "{err}");
    let (code, _, _) = binary(&["bound", "--e1"], "0: 1 3 2\n", None);
    assert_eq!(code, 1, "not self-dual");
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["verify"],
        vec!["coeffs", "--l", "3"],
        vec!["sym-decompose"],
        vec!["--output", "text", "bound", "--e1"],
    ] {
        let first = binary(&args, EXAMPLE3, None);
        let second = binary(&args, EXAMPLE3, None);
        assert_eq!(first, second);
        assert_eq!(first.0, 0);
    }
    let a = binary(&["fuzz", "--s-max", "4", "--ds-max", "10", "--check", "conj"], "", None);
    let b = binary(&["fuzz", "--s-max", "4", "--ds-max", "10", "--check", "conj"], "", None);
    assert_eq!(a, b);
}

#[test]
fn json_keys_are_sorted() {
    let (_, out, _) = binary(&["bound", "--e1"], EXAMPLE1, None);
    let keys: Vec<&str> = out
        .lines()
        .filter(|l| l.starts_with("  \"") && l.contains(':'))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn decimal_digits_precedence() {
    let (_, out, _) = binary(&["bound", "--e1"], EXAMPLE3, None);
    assert!(out.contains("\"decimal\": \"130.208333\""));
    let (_, out, _) = binary(&["bound", "--e1"], EXAMPLE3, Some(("BETTI_DECIMAL_DIGITS", "2")));
    assert!(out.contains("\"decimal\": \"130.21\""));
    let (_, out, _) = binary(&["--decimal-digits", "4", "bound", "--e1"], EXAMPLE3, Some(("BETTI_DECIMAL_DIGITS", "2")));
    assert!(out.contains("\"decimal\": \"130.2083\""));
}

#[test]
fn koszul_and_decompose_round_trip_through_json() {
    let (_, out, _) = binary(&["koszul", "4"], "", None);
    let (code, dec, _) = binary(&["decompose"], &out, None);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&dec).unwrap();
    assert_eq!(v["reconstructs"], true);
    assert_eq!(v["parts"], serde_json::json!([{"r": "24", "d": [0, 1, 2, 3, 4]}]));
}
