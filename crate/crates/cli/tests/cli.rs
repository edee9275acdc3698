//! End-to-end tests of the `mvfn` binary: exit codes, output formats, stdin.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn mvfn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mvfn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn eval_prints_the_display_form() {
    let out = mvfn(&["eval", "e1 e2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 e12");
}

#[test]
fn eval_json_is_machine_readable() {
    let out = mvfn(&["eval", "--json", "--dim", "3", "exp(0)"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["dim"], 3);
    assert_eq!(v["coeffs"][0], 1.0);
}

#[test]
fn syntax_errors_exit_2() {
    let out = mvfn(&["eval", "1 + $"]);
    assert_eq!(out.status.code(), Some(2));
    let out = mvfn(&["eval", "nosuchname"]);
    assert_eq!(out.status.code(), Some(2));
    let out = mvfn(&["eval", "--dim", "9", "1"]);
    assert_eq!(out.status.code(), Some(2)); // out-of-range flag value is a usage error
    let out = mvfn(&["solve-sylvester", "--a", r#"{"dim":2,"coeffs":[1,2]}"#, "--b", "1", "--y", "1"]);
    assert_eq!(out.status.code(), Some(2)); // malformed multivector literal
}

#[test]
fn domain_errors_exit_1() {
    let out = mvfn(&["eval", "log(0)"]);
    assert_eq!(out.status.code(), Some(1));
    let out = mvfn(&["eval", "inv(1 + e1)"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    let out = mvfn(&["no-such-subcommand"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dimension_4_restrictions_apply() {
    let out = mvfn(&["eval", "--dim", "4", "sharp(e1234 + e1)"]);
    assert!(out.status.success());
    let out = mvfn(&["eval", "--dim", "4", "exp(e1)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn power_side_flag_changes_noncommuting_powers() {
    let right = mvfn(&["eval", "--dim", "3", "(2+e1+e3)^(e2+e23)"]);
    let left = mvfn(&[
        "eval",
        "--dim",
        "3",
        "--power-side",
        "left",
        "(2+e1+e3)^(e2+e23)",
    ]);
    assert!(right.status.success() && left.status.success());
    assert_ne!(stdout(&right), stdout(&left));
}

#[test]
fn check_relations_filter_and_json() {
    let out = mvfn(&[
        "check-relations",
        "--filter",
        "j_pow_j",
        "--samples",
        "5",
        "--seed",
        "1",
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["name"], "j_pow_j");
    assert_eq!(v["status"], "pass");

    let out = mvfn(&["check-relations", "--filter", "zzz_nothing"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn solve_sylvester_accepts_json_and_text() {
    let out = mvfn(&[
        "solve-sylvester",
        "--a",
        r#"{"dim":2,"coeffs":[2,0,0,1]}"#,
        "--b",
        "1 + e1",
        "--y",
        "e2",
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["dim"], 2);
    assert!(v["residual"].as_f64().unwrap() < 1e-12);

    let out = mvfn(&["solve-sylvester", "--a", "2", "--b", "3", "--y", "10"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("2\n"), "wanted the scalar 2, got {text:?}");
    assert!(text.contains("residual = "));
}

#[test]
fn eval_matches_documented_values() {
    let out = mvfn(&["eval", "--dim", "2", "sqrt(3+4*i)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2 + 1 e12");

    // 1 - e1 has null amplitude, so the division has no answer.
    let out = mvfn(&["eval", "--dim", "2", "(1+e1)/(1-e1)"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["check-relations", "--samples", "5", "--seed", "11"];
    let a = mvfn(&args);
    let b = mvfn(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn repl_binds_variables_and_reports_errors_without_dying() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mvfn"))
        .args(["repl", "--dim", "2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"let x = 1 + e1\nlog(0)\nx x\n:q\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("x = 1 + 1 e1"));
    assert!(text.contains("2 + 2 e1")); // (1+e1)^2
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn ga_tol_environment_variable_loosens_checks() {
    // A slightly non-unit rotor: rejected at the default tolerance, accepted
    // when GA_TOL is loosened.
    let expr = "tan(0.1 + 0.2e1)";
    let strict = Command::new(env!("CARGO_BIN_EXE_mvfn"))
        .args(["eval", "--dim", "3", expr])
        .env("GA_TOL", "1e-15")
        .output()
        .unwrap();
    let loose = Command::new(env!("CARGO_BIN_EXE_mvfn"))
        .args(["eval", "--dim", "3", expr, "--tol", "1e-6"])
        .env("GA_TOL", "not-a-number")
        .output()
        .unwrap();
    // Both must run; the flag overrides the environment, bad values fall back.
    assert!(strict.status.success());
    assert!(loose.status.success());
}
