//! End-to-end tests of the `rvc` binary, pinned against golden files in
//! `tests/golden/`. The goldens were produced by the same commands the
//! tests run; any byte drift in formats, seeding, or arithmetic shows up
//! here first.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rvc"))
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn read(name: &str) -> String {
    std::fs::read_to_string(golden(name)).unwrap()
}

fn stdout_of(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).unwrap()
}

#[test]
fn gen_reproduces_the_golden_graph() {
    let out = bin().args(["gen", "-n", "7", "-p", "1/2", "--seed", "11"]).output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), read("small.col"));
}

#[test]
fn compress_fast_matches_golden_instance_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.txt");
    let out = bin()
        .args(["compress"])
        .arg(golden("small.col"))
        .args(["-k", "2", "--seed", "42", "--no-shortcut", "--verify", "--report"])
        .arg(&report)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), read("small.rvc1"), "instance drifted");
    assert_eq!(
        std::fs::read_to_string(&report).unwrap(),
        read("small.report"),
        "report drifted"
    );
    // the report also lands on stderr
    assert_eq!(std::str::from_utf8(&out.stderr).unwrap(), read("small.report"));
}

#[test]
fn compress_faithful_matches_golden() {
    let out = bin()
        .args(["compress"])
        .arg(golden("small.col"))
        .args([
            "-k", "2", "--seed", "42", "--no-shortcut", "--verify", "--mode", "faithful",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), read("faithful.rvc1"));
    assert_eq!(std::str::from_utf8(&out.stderr).unwrap(), read("faithful.report"));
}

#[test]
fn compress_is_seed_sensitive() {
    let run = |seed: &str| {
        let out = bin()
            .args(["compress"])
            .arg(golden("small.col"))
            .args(["-k", "2", "--seed", seed, "--no-shortcut"])
            .output()
            .unwrap();
        assert!(out.status.success());
        stdout_of(&out).to_string()
    };
    assert_eq!(run("42"), run("42"));
    assert_ne!(run("42"), run("43"));
}

#[test]
fn shortcut_fires_for_small_k() {
    let out = bin()
        .args(["compress"])
        .arg(golden("small.col"))
        .args(["-k", "2", "--seed", "42", "--verify"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stderr = std::str::from_utf8(&out.stderr).unwrap();
    assert!(stderr.contains("shortcut=yes"));
    assert!(stderr.contains("verified=yes"));
    // the constant instance is a one-vertex YES
    assert!(stdout_of(&out).contains("n 1 m 0"));
}

#[test]
fn decide_answers_yes_and_no() {
    let out = bin().arg("decide").arg(golden("small.rvc1")).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "YES\n");

    // push the budget below tau by hand: the golden has tau 1, l 2
    let dir = tempfile::tempdir().unwrap();
    let no_path = dir.path().join("no.rvc1");
    let text = read("small.rvc1").replace("l 2", "l 0");
    std::fs::write(&no_path, text).unwrap();
    let out = bin().arg("decide").arg(&no_path).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "NO\n");
}

#[test]
fn verify_compares_instances() {
    let out = bin()
        .arg("verify")
        .arg(golden("small.rvc1"))
        .arg(golden("faithful.rvc1"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "EQUIVALENT\n");

    let dir = tempfile::tempdir().unwrap();
    let no_path = dir.path().join("no.rvc1");
    std::fs::write(&no_path, read("small.rvc1").replace("l 2", "l 0")).unwrap();
    let out = bin().arg("verify").arg(golden("small.rvc1")).arg(&no_path).output().unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(stdout_of(&out), "NOT EQUIVALENT\n");
}

#[test]
fn stats_reports_the_golden_instance() {
    let out = bin().arg("stats").arg(golden("small.rvc1")).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "domain=gfp 3416442862132849819\nn=2\nm=1\nr=1\nl=2\nrank=1\nloops=0\ncoloops=0\n"
    );
}

#[test]
fn exit_codes_for_failure_classes() {
    let dir = tempfile::tempdir().unwrap();

    // 1: unreadable input
    let out = bin()
        .args(["compress", "/definitely/not/here.col", "-k", "1", "--seed", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    // 1: malformed graph
    let bad = dir.path().join("bad.col");
    std::fs::write(&bad, "hello\n").unwrap();
    let out = bin().arg("compress").arg(&bad).args(["-k", "1", "--seed", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    // 1: clap-level misuse
    let out = bin().arg("compress").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    // 0: help is not an error
    let out = bin().arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));

    // 3: oracle out of reach
    let big = dir.path().join("big.col");
    let gen = bin().args(["gen", "-n", "17", "-p", "1/4", "--seed", "2"]).output().unwrap();
    std::fs::write(&big, &gen.stdout).unwrap();
    let out = bin()
        .arg("compress")
        .arg(&big)
        .args(["-k", "6", "--seed", "1", "--no-shortcut", "--verify"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn compressed_output_reparses_and_decides_the_same() {
    // round-trip through a file: compress | decide, then reparse the
    // emitted instance byte for byte
    let dir = tempfile::tempdir().unwrap();
    for seed in ["7", "8", "9"] {
        let inst = dir.path().join(format!("out-{seed}.rvc1"));
        let out = bin()
            .args(["compress"])
            .arg(golden("small.col"))
            .args(["-k", "2", "--seed", seed, "--no-shortcut", "--verify", "-o"])
            .arg(&inst)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "seed {seed}");
        let text = std::fs::read_to_string(&inst).unwrap();
        let parsed = rvc_core::instance::parse_instance(&text).unwrap();
        assert_eq!(rvc_core::instance::serialize_instance(&parsed), text);
    }
}
