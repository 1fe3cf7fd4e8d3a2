//! Black-box tests of the command-line interface: exit codes, document
//! validation, and reproducible structured output.

use std::io::Write;
use std::process::{Command, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_copositive"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn copositive");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

const CASE1: &str = r#"{"order":3,"dim":3,"entries":{"111":1,"222":1,"333":1,"112":0,"122":1,"113":-1,"133":1,"223":1,"233":1,"123":-1}}"#;

#[test]
fn check_strict_tensor_exits_zero() {
    let (code, stdout, _) = run_with_stdin(&["check", "--method", "auto"], CASE1);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("Theorem 3.1"));
    assert!(stdout.contains("simplex min 1/49"));
}

#[test]
fn check_negative_diagonal_exits_one_with_vertex_witness() {
    let doc = r#"{"order":3,"dim":3,"entries":{"111":-1,"222":1,"333":1,"122":1,"133":1,"123":-1}}"#;
    let (code, stdout, _) = run_with_stdin(&["check"], doc);
    assert_eq!(code, 1, "{stdout}");
    assert!(stdout.contains("witness: (1, 0, 0)"), "{stdout}");
}

#[test]
fn check_oracle_method_and_dim2() {
    let (code, stdout, _) = run_with_stdin(&["check", "--method", "oracle"], CASE1);
    assert_eq!(code, 0, "{stdout}");

    let dim2 = r#"{"order":3,"dim":2,"entries":{"111":1,"112":"-1","122":1,"222":1}}"#;
    let (code, stdout, _) = run_with_stdin(&["check"], dim2);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("discriminant 4"), "{stdout}");
}

#[test]
fn invalid_documents_exit_64() {
    let (code, _, stderr) = run_with_stdin(&["check"], r#"{"order":4,"dim":3,"entries":{}}"#);
    assert_eq!(code, 64);
    assert!(stderr.contains("order"), "{stderr}");

    let (code, _, stderr) =
        run_with_stdin(&["check"], r#"{"order":3,"dim":3,"entries":{"112":0.25}}"#);
    assert_eq!(code, 64);
    assert!(stderr.contains("112"), "{stderr}");

    let (code, _, _) = run_with_stdin(&["check"], "not json");
    assert_eq!(code, 64);
}

#[test]
fn unwritable_output_exits_74() {
    let (code, _, stderr) = run_with_stdin(
        &[
            "check",
            "--output",
            "/nonexistent-dir/report.json",
        ],
        CASE1,
    );
    assert_eq!(code, 74);
    assert!(stderr.contains("cannot write"), "{stderr}");
}

#[test]
fn records_output_is_byte_identical_across_runs() {
    let args = ["check", "--format", "records"];
    let (c1, out1, _) = run_with_stdin(&args, CASE1);
    let (c2, out2, _) = run_with_stdin(&args, CASE1);
    assert_eq!(c1, 0);
    assert_eq!(c1, c2);
    assert_eq!(out1, out2);
    assert!(out1.starts_with('{') && out1.ends_with('\n'));

    let args = ["inequalities", "--denominator", "12", "--format", "records"];
    let (c1, out1, _) = run_with_stdin(&args, "");
    let (c2, out2, _) = run_with_stdin(&args, "");
    assert_eq!(c1, 0, "corrected readings must all verify");
    assert_eq!(c1, c2);
    assert_eq!(out1, out2);
    assert_eq!(out1.lines().count(), 60);
}

#[test]
fn sample_command_is_deterministic() {
    let args = ["sample", "--count", "5", "--seed", "11", "--format", "records"];
    let (c1, out1, _) = run_with_stdin(&args, "");
    let (c2, out2, _) = run_with_stdin(&args, "");
    assert_eq!(c1, 0, "{out1}");
    assert_eq!(c1, c2);
    assert_eq!(out1, out2);
    assert!(out1.contains("\"seed\":11"));
}
