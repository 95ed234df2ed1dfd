//! Black-box tests of the command-line binary: exit codes, JSON output,
//! and the round trip between `decompose` and `verify`.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_starforest"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("failed to spawn binary")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("starforest-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn decompose_reports_class_counts() {
    let out = run(&["decompose", "9"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["n"], 9);
    assert_eq!(doc["classes"].as_array().unwrap().len(), 6);

    let out = run(&["decompose", "6"]);
    assert_eq!(stdout_json(&out)["classes"].as_array().unwrap().len(), 4);
}

#[test]
fn decompose_capacity_exit_code() {
    let out = run(&["decompose", "25"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn decompose_with_explicit_method() {
    let out = run(&["decompose", "10", "--method", "PlusOne(PowerPlus1(3))"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["classes"].as_array().unwrap().len(), 7);

    // Mismatched dimension is a usage error.
    let out = run(&["decompose", "9", "--method", "Base(3)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_round_trip_and_tampering() {
    let path = scratch("q8.json");
    let out = run(&["decompose", "8", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());

    let out = run(&["verify", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["valid"], true);

    // Delete one edge: coverage violation, exit 1.
    let text = std::fs::read_to_string(&path).unwrap();
    let mut doc: Value = serde_json::from_str(&text).unwrap();
    let removed = doc["classes"][0].as_array_mut().unwrap().remove(0);
    let missing_path = scratch("q8-missing.json");
    std::fs::write(&missing_path, doc.to_string()).unwrap();
    let out = run(&["verify", missing_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout_json(&out);
    assert_eq!(report["valid"], false);
    assert!(report["violations"]
        .as_array()
        .unwrap()
        .iter()
        .any(|v| v["kind"] == "missing"));

    // Put the edge back in the wrong class: duplicate or broken star.
    let mut doc: Value = serde_json::from_str(&text).unwrap();
    doc["classes"][1].as_array_mut().unwrap().push(removed);
    let moved_path = scratch("q8-moved.json");
    std::fs::write(&moved_path, doc.to_string()).unwrap();
    let out = run(&["verify", moved_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    // Malformed JSON is a usage error.
    let bad_path = scratch("q8-bad.json");
    std::fs::write(&bad_path, "{not json").unwrap();
    let out = run(&["verify", bad_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bounds_single_and_range() {
    let out = run(&["bounds", "11"]);
    assert!(out.status.success());
    let r = stdout_json(&out);
    assert_eq!(r["lower"], 7);
    assert_eq!(r["upper"], 8);
    assert_eq!(r["exact"], false);

    let out = run(&["bounds", "--range", "1..10"]);
    assert!(out.status.success());
    let rs = stdout_json(&out);
    let uppers: Vec<u64> = rs
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["upper"].as_u64().unwrap())
        .collect();
    assert_eq!(uppers, vec![1, 2, 3, 4, 4, 4, 5, 6, 6, 7]);

    let out = run(&["bounds"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exact_on_k4() {
    let out = run(&["exact", "C~"]);
    assert!(out.status.success());
    let r = stdout_json(&out);
    assert_eq!(r["sa"], 3);

    // A tiny budget must abort with the capacity/budget exit code.
    let out = run(&["exact", "C~", "--budget", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn square_route() {
    let out = run(&["square", "--t", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["classes"].as_array().unwrap().len(), 5);

    let out = run(&["square"]);
    assert_eq!(out.status.code(), Some(2));
}
