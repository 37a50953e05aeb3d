//! End-to-end tests of the `matroid-csm` binary: command output, exit codes,
//! round trips, and byte determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_matroid-csm"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn info_prints_the_lattice_of_the_worked_example() {
    let out = run(&["info", "example-2.4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("rank: 3"));
    assert!(text.contains("flats rank 1: {0} {1} {2} {3}"));
    assert!(text.contains("flats rank 2: {01} {02} {03} {123}"));
    assert!(text.contains("coloops: {0}"));
    assert!(text.contains("characteristic polynomial: q^3 - 4q^2 + 5q - 2"));
    assert!(text.contains("chow graded ranks: (1, 5, 1)"));
}

#[test]
fn info_prints_u33_graded_ranks() {
    let out = run(&["info", "u33"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("chow graded ranks: (1, 4, 1)"));
}

#[test]
fn csm_reports_zero_for_the_loop_matroid() {
    let out = run(&["csm", "loop"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("staircase: 0"));
    assert!(text.contains("(all cones)\t0"));
}

#[test]
fn csm_u23_has_the_expected_weights() {
    let out = run(&["csm", "u23", "--route", "both"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("staircase: 1 - x_{0}"));
    assert!(text.contains("0\t<origin>\t-1"));
    // JSON output parses and has one weight block per dimension.
    let out = run(&["csm", "u23", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["weights"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_corpus_passes_and_exit_code_is_zero() {
    let out = run(&["verify", "--corpus", "--identity", "all"]);
    assert!(out.status.success(), "exit: {:?}", out.status);
    let report: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report.len() > 100);
    assert!(report.iter().all(|r| r["result"] != "fail"));
}

#[test]
fn verify_reports_not_applicable_for_coloops() {
    let out = run(&[
        "verify",
        "example-2.4",
        "--identity",
        "cd-theorem-4.1",
        "--element",
        "0",
    ]);
    assert!(out.status.success());
    let report: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.len(), 1);
    assert_eq!(report[0]["result"], "n/a");

    let out = run(&[
        "verify",
        "example-2.4",
        "--identity",
        "cd-theorem-4.1",
        "--element",
        "3",
    ]);
    assert!(out.status.success());
    let report: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report[0]["result"], "pass");
}

#[test]
fn corpus_list_and_dump_round_trip() {
    let out = run(&["corpus", "--list"]);
    assert!(out.status.success());
    let listing = stdout(&out);
    let lines: Vec<&str> = listing.lines().collect();
    assert!(lines.len() >= 10, "corpus has {} entries", lines.len());
    assert!(lines.iter().any(|l| l.starts_with("fano")));

    let dir = std::env::temp_dir().join(format!("matroid-csm-dump-{}", std::process::id()));
    let out = run(&["corpus", "--dump", dir.to_str().unwrap()]);
    assert!(out.status.success());
    let dumped: Vec<PathBuf> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    assert!(dumped.len() >= 10);
    // Every dumped file loads back through info.
    for path in &dumped {
        let out = run(&["info", path.to_str().unwrap()]);
        assert!(out.status.success(), "info failed for {}", path.display());
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn malformed_json_exits_with_usage_code() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("matroid-csm-bad-{}.json", std::process::id()));
    std::fs::write(&path, "{\"n\": 3, ").unwrap();
    let out = run(&["info", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("parse error"), "{err}");
    assert!(err.contains("line"), "missing position: {err}");
    std::fs::remove_file(&path).ok();

    // Unknown identity is a usage error too.
    let out = run(&["verify", "u23", "--identity", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        vec!["csm", "example-2.4", "--format", "json"],
        vec!["verify", "--corpus", "--identity", "duality"],
        vec!["info", "fano"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "args {args:?}");
    }
}

#[test]
fn thread_cap_env_var_is_honored() {
    let out = bin()
        .env("MATROID_CSM_THREADS", "1")
        .args(["verify", "--corpus", "--identity", "route-equivalence"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
}
