//! Exit statuses, output stability and worker invariance of the binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_ramsey-goodness");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).env_remove("RAMSEY_WORKERS").args(args).output().expect("binary runs")
}

fn status(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit status")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().expect("stdin").write_all(input.as_bytes()).expect("stdin accepts");
    child.wait_with_output().expect("binary finishes")
}

fn json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("JSON output")
}

/// JSON output with the timing field removed.
fn untimed(output: &Output) -> Value {
    let mut value = json(output);
    if let Some(fields) = value.as_object_mut() {
        fields.remove("elapsed_seconds");
    }
    value
}

#[test]
fn verified_claims_exit_zero() {
    assert_eq!(status(&["verify", "thm1.3", "--n", "2", "--m", "6"]), 0);
    assert_eq!(status(&["verify", "lemma3.1", "--max-order", "5"]), 0);
    assert_eq!(status(&["construct", "star", "--m", "6"]), 0);
    assert_eq!(status(&["construct", "burr", "--g-order", "5", "--pair", "6"]), 0);
    assert_eq!(status(&["ramsey", "--n", "2", "--pair", "6"]), 0);
}

#[test]
fn vacuous_verification_exits_zero_and_says_so() {
    let out = run(&["--output", "json", "verify", "lemma2.6", "--n", "2", "--m", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["outcome"], "verified_vacuous");
}

#[test]
fn counterexample_exits_one_and_is_revalidated() {
    // R(C_4, C_4) = 6, so five vertices do not suffice for C_4 versus C_4
    let out = run(&["--output", "json", "verify", "thm1.6", "--n", "2", "--m", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    assert_eq!(report["outcome"], "counterexample");
    let graph6 = report["counterexample"]["graph"].as_str().expect("graph6").to_owned();
    let check = run(&["--output", "json", "check", "--k2n", "2", "--cycle", "4", &graph6]);
    assert_eq!(check.status.code(), Some(0), "the counterexample is K_{{2,2}}-free");
    assert_eq!(json(&check)["has_cycle"], false, "a K_{{2,2}}-free graph has no C_4 ...");
    let complement_check = {
        let g = ramsey_goodness::decode_graph6(&graph6).expect("valid graph6");
        ramsey_goodness::encode_graph6(&g.complement())
    };
    let check = run(&["--output", "json", "check", "--cycle", "4", &complement_check]);
    assert_eq!(json(&check)["has_cycle"], false, "... and neither does its complement");
}

#[test]
fn infeasible_and_invalid_inputs_exit_two() {
    assert_eq!(status(&["ramsey", "--n", "2", "--pair", "6", "--max-order", "5"]), 2);
    assert_eq!(status(&["verify", "thm1.4", "--n", "6", "--m", "6"]), 2);
    assert_eq!(status(&["verify", "thm1.3", "--n", "2", "--m", "20"]), 2);
    assert_eq!(status(&["verify", "thm1.3", "--m", "6"]), 2, "missing --n");
    assert_eq!(status(&["construct", "lemma42", "--m", "5", "--q", "2", "--t", "0"]), 2);
    assert_eq!(status(&["construct", "lemma41", "--m", "5", "--p", "2", "--t", "2"]), 2);
    assert_eq!(status(&["check", "not graph6"]), 2);
    assert_eq!(status(&["--workers", "0", "check", "A_"]), 2);
}

#[test]
fn check_reports_k2n_with_exit_one() {
    // C_4 is K_{2,2}
    let out = run(&["--output", "json", "check", "--k2n", "2", "Cr"]);
    assert_eq!(out.status.code(), Some(1));
    let result = json(&out);
    assert_eq!(result["k2n_free"], false);
    assert_eq!(result["k2n_witness"]["kind"], "k2n");
    assert_eq!(status(&["check", "--k2n", "3", "Cr"]), 0);
}

#[test]
fn check_reads_graph6_lines_from_stdin() {
    // K_3, C_4 (as graph6) and the empty graph on five vertices
    let out = run_with_stdin(&["--output", "json", "check", "--girth", "--circumference"], "Bw\nCr\n\nD??\n");
    assert_eq!(out.status.code(), Some(0));
    let results: Vec<Value> = String::from_utf8(out.stdout)
        .expect("utf-8")
        .lines()
        .map(|line| serde_json::from_str(line).expect("JSON line"))
        .collect();
    let girths: Vec<&Value> = results.iter().map(|r| &r["girth"]).collect();
    assert_eq!(girths, [&Value::from(3), &Value::from(4), &Value::Null]);
    let circumferences: Vec<&Value> = results.iter().map(|r| &r["circumference"]).collect();
    assert_eq!(circumferences, [&Value::from(3), &Value::from(4), &Value::from(0)]);
}

#[test]
fn json_output_is_byte_stable_apart_from_timing() {
    let args = ["--output", "json", "verify", "lemma-props", "--max-order", "6"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(untimed(&first), untimed(&second));
    let strip = |out: &Output| -> String {
        String::from_utf8(out.stdout.clone())
            .expect("utf-8")
            .lines()
            .filter(|line| !line.trim_start().starts_with("\"elapsed_seconds\""))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&first), strip(&second));
    let construct = ["--output", "json", "construct", "lemma41", "--m", "5", "--p", "1", "--t", "2"];
    assert_eq!(run(&construct).stdout, run(&construct).stdout);
}

#[test]
fn worker_count_does_not_change_results() {
    for args in [
        &["verify", "thm1.3", "--n", "2", "--m", "7"][..],
        &["verify", "lemma3.1", "--max-order", "6"][..],
        &["verify", "thm1.6", "--n", "2", "--m", "4"][..],
        &["ramsey", "--n", "2", "--cycle", "5"][..],
    ] {
        let one = run(&[&["--output", "json", "--workers", "1"][..], args].concat());
        let three = run(&[&["--output", "json", "--workers", "3"][..], args].concat());
        assert_eq!(one.status.code(), three.status.code(), "{args:?}");
        assert_eq!(untimed(&one), untimed(&three), "{args:?}");
    }
}

#[test]
fn workers_can_come_from_the_environment() {
    let out = Command::new(BIN)
        .env("RAMSEY_WORKERS", "0")
        .args(["check", "A_"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2), "zero workers is rejected");
}

#[test]
fn out_flag_writes_report_to_file() {
    let dir = std::env::temp_dir().join(format!("ramsey-goodness-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join("report.json");
    let out = run(&["--output", "json", "--out", path.to_str().expect("utf-8 path"), "construct", "star", "--m", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written: Value = serde_json::from_slice(&std::fs::read(&path).expect("report written")).expect("JSON");
    assert_eq!(written["name"], "star");
    std::fs::remove_dir_all(&dir).expect("cleanup");
}

#[test]
fn human_output_restates_the_claim_on_stderr() {
    let out = run(&["verify", "thm1.3", "--n", "2", "--m", "6"]);
    let stderr = String::from_utf8(out.stderr).expect("utf-8");
    assert!(stderr.contains("testing:"), "{stderr}");
    let stdout = String::from_utf8(out.stdout).expect("utf-8");
    assert!(stdout.contains("VERIFIED"), "{stdout}");
    assert!(stdout.contains("exact value:       7"), "{stdout}");
}

#[test]
fn descriptive_claim_aliases_are_accepted() {
    let token = run(&["--output", "json", "verify", "thm1.3", "--n", "2", "--m", "6"]);
    let alias = run(&["--output", "json", "verify", "cycle-pair-goodness", "--n", "2", "--m", "6"]);
    assert_eq!(untimed(&token), untimed(&alias));
    let token = run(&["--output", "json", "construct", "lemma41", "--m", "5", "--p", "1", "--t", "2"]);
    let alias = run(&["--output", "json", "construct", "uniform", "--m", "5", "--p", "1", "--t", "2"]);
    assert_eq!(token.stdout, alias.stdout);
}
