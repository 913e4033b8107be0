//! The `exceptional` executable: exit codes, output shape and determinism.

mod common;

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_exceptional"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn json_lines(out: &Output) -> Vec<serde_json::Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn verify_corpus_succeeds() {
    let path = common::corpus_path();
    let out = run(&["verify", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let summary = &json_lines(&out)[0];
    assert_eq!(summary["holds"], true);
    assert_eq!(summary["failures"], 0);
    assert!(summary["max_p_r"].as_u64().unwrap() <= 71);
}

#[test]
fn reports_are_deterministic_across_thread_counts() {
    let path = common::corpus_path();
    let one = run(&["sieve", path.to_str().unwrap(), "--threads", "1"], None);
    let four = run(&["sieve", path.to_str().unwrap(), "--threads", "4"], None);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let lines = json_lines(&one);
    assert_eq!(lines.len(), common::expected().len());
    let first = &lines[0];
    for key in ["schema", "label", "j", "mode", "qlist", "d", "r", "raw_S", "refined"] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn batch_continues_past_bad_lines() {
    let text = "a 0 0 1 -1 0\nbad 0 0\ncm j 1728\nb j -9317\n";
    let out = run(&["sieve", "-"], Some(text));
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[1]["line"], 2);
    assert!(lines[1]["error"].is_string());
    assert!(lines[2]["error"].as_str().unwrap().contains("CM"));
    assert_eq!(lines[3]["mode"], "sieve");
    assert!(lines[3].get("p_r").is_some());
    assert!(lines[0].get("p_r").is_none());
}

#[test]
fn unresolved_large_prime_fails_verification() {
    // 67 ≡ −1 (mod 17) and the exponent is 17, so 17 divides g
    let text = "x j 1/11047694236668359048016134593027\n";
    let out = run(&["verify", "-", "--witness-bound", "0"], Some(text));
    assert_eq!(out.status.code(), Some(2));
    let summary = &json_lines(&out)[0];
    assert_eq!(summary["holds"], false);
    assert_eq!(summary["violations"][0]["undetermined"][0], 17);
}

#[test]
fn missing_file_is_an_io_error() {
    let out = run(&["sieve", "/nonexistent/curves.txt"], None);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bound_and_families_subcommands() {
    let out = run(&["bound", "--conductor", "1225"], None);
    let v = &json_lines(&out)[0];
    assert_eq!(v["conductor_bound"], "37");
    assert_eq!(v["sturm_prime_bound"], "139");

    let out = run(&["families", "--j", "102400", "--ell", "5"], None);
    let hits: Vec<_> = json_lines(&out).into_iter().filter(|v| v["member"] == true).collect();
    assert_eq!(hits.len(), 1);
    assert_eq!(hits[0]["t"], "1");
}
