//! End-to-end checks of the `ncinv` binary: golden-table fidelity and
//! byte-determinism (the tenth acceptance criterion), format agreement,
//! exit-status contract, and the documented flag/env behaviors.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn ncinv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncinv"))
        .args(args)
        .env_remove("NCINV_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = ncinv(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn fresh_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ncinv-{tag}-{}", std::process::id()));
    if dir.exists() {
        std::fs::remove_dir_all(&dir).expect("clear stale temp dir");
    }
    dir
}

#[test]
fn criterion_10_golden_tables_and_determinism() {
    let golden = golden_dir();
    let runs: Vec<PathBuf> = ["a", "b"]
        .iter()
        .map(|tag| {
            let dir = fresh_dir(&format!("tables-{tag}"));
            let out = ncinv(&["tables", "--format", "csv", "--out-dir", dir.to_str().unwrap()]);
            assert!(out.status.success());
            dir
        })
        .collect();
    for name in ["table1.csv", "table2.csv", "table3.csv", "table4.csv"] {
        let committed = std::fs::read(golden.join(name)).expect("committed fixture");
        let first = std::fs::read(runs[0].join(name)).expect("first run output");
        let second = std::fs::read(runs[1].join(name)).expect("second run output");
        assert_eq!(first, second, "{name} differs between runs");
        assert_eq!(first, committed, "{name} differs from the committed fixture");
    }
    for dir in runs {
        std::fs::remove_dir_all(dir).expect("clean up temp dir");
    }
    for (args, fixture) in [
        (["tables", "--format", "json"], "tables.json"),
        (["tables", "--format", "text"], "tables.txt"),
    ] {
        let committed = std::fs::read_to_string(golden.join(fixture)).expect("committed fixture");
        let first = stdout_of(&args);
        let second = stdout_of(&args);
        assert_eq!(first, second, "{fixture} differs between runs");
        assert_eq!(first, committed, "{fixture} differs from the committed fixture");
    }
    println!("[criterion 10] golden tables: byte-identical across runs and to fixtures: PASS");
}

#[test]
fn formats_carry_the_same_values() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout_of(&["tables", "--format", "json"])).expect("valid JSON");
    let text = stdout_of(&["tables", "--format", "text"]);
    let csv1 = std::fs::read_to_string(golden_dir().join("table1.csv")).unwrap();
    for row in json["table1"].as_array().unwrap() {
        let display = row["display"].as_str().unwrap();
        assert!(text.contains(display), "text output lacks {display}");
        assert!(csv1.contains(display), "CSV output lacks {display}");
        let rec = row["recurrence"]["display"].as_str().unwrap();
        assert!(text.contains(rec) && csv1.contains(rec));
    }
    let t3 = json["table3"].as_array().unwrap();
    assert_eq!(t3.len(), 6);
    let counts: Vec<u64> = t3.iter().map(|r| r["count"].as_u64().unwrap()).collect();
    assert_eq!(counts, vec![0, 1, 1, 2, 3, 5]);
    let csv3 = std::fs::read_to_string(golden_dir().join("table3.csv")).unwrap();
    for (row, line) in t3.iter().zip(csv3.lines().skip(1)) {
        assert!(line.starts_with(&format!("{},{},", row["degree"], row["count"])));
    }
}

#[test]
fn hilbert_command_examples() {
    let text = stdout_of(&["hilbert", "--n", "3", "--terms", "10"]);
    assert!(text.contains("H_6(t) = (t^2 + t - 1)/(2t^2 + t - 1)"));
    assert!(text.contains("coefficients: 1, 0, 1, 1, 3, 5, 11, 21, 43, 85"));
    assert!(text.contains("recurrence: a(m+2) = a(m+1) + 2a(m)"));

    let function_only = stdout_of(&["hilbert", "--n", "10", "--terms", "0"]);
    assert!(function_only
        .contains("H_20(t) = (2t^6 - 9t^4 + 6t^2 - 1)/(4t^6 - 13t^4 + 7t^2 - 1)"));
    assert!(!function_only.contains("coefficients"));

    let json: serde_json::Value =
        serde_json::from_str(&stdout_of(&["hilbert", "--n", "3", "--format", "json"]))
            .expect("valid JSON");
    assert_eq!(json["order"], 6);
    assert_eq!(json["coefficients"][4], "3");
    assert_eq!(json["recurrence"]["coeffs"][1], "2");

    let canonical = stdout_of(&["hilbert", "--n", "3", "--canonical"]);
    assert!(canonical.contains("H_6(t) = (-t^2 - t + 1)/(-2t^2 - t + 1)"));
}

#[test]
fn gens_command_examples() {
    let text = stdout_of(&["gens", "--n", "3", "--max-degree", "8", "--leading-terms"]);
    assert!(text.contains("G_6(t) = (-t^2)/(t^2 + t - 1)"));
    assert!(text.contains("coefficients: 0, 0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55"));
    assert!(text.contains("degree 2: 1 generator: uv"));
    assert!(text.contains("degree 4: 2 generators: u^2v^2, uv^2u"));
    assert!(text.contains("degree 5: 3 generators: u^4v, u^2vu^2, uv^4"));
    assert!(text.contains("degree 8: 13 generators:"));

    let row6 = stdout_of(&["gens", "--n", "6"]);
    assert!(row6.contains("G_12(t) = (-2t^4 + t^2)/(2t^4 - 4t^2 + 1)"));

    let single = stdout_of(&["gens", "--n", "3", "--max-degree", "2", "--leading-terms"]);
    assert!(single.contains("degree 2: 1 generator: uv"));
    assert!(!single.contains("degree 3"));

    let csv = stdout_of(&["gens", "--n", "3", "--max-degree", "4", "--leading-terms", "--format", "csv"]);
    assert!(csv.starts_with("degree,count,leading_terms\n"));
    assert!(csv.contains("4,2,\"u^2v^2, uv^2u\"\n"));
}

#[test]
fn verify_exit_status_contract() {
    let ok = ncinv(&["verify", "--which", "hilbert", "--n", "3"]);
    assert!(ok.status.success());
    let text = String::from_utf8(ok.stdout).unwrap();
    assert!(text.contains("2 checks, 2 passed, 0 failed"));

    let psi = ncinv(&["verify", "--which", "psi", "--n", "32", "--format", "csv"]);
    assert!(psi.status.success());
    let csv = String::from_utf8(psi.stdout).unwrap();
    assert_eq!(csv.lines().count(), 4);
    assert!(csv.lines().skip(1).all(|l| l.ends_with("PASS")));

    // parameter a suite cannot run with: clean error, no partial output
    let bad = ncinv(&["verify", "--which", "salgebra", "--n", "5", "--max-degree", "4"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
    assert!(String::from_utf8_lossy(&bad.stderr).contains("max-degree"));
}

#[test]
fn invalid_order_is_rejected_without_output() {
    let out = ncinv(&["hilbert", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let out = ncinv(&["gens", "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn degree_cap_env_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_ncinv"))
        .args(["gens", "--n", "3", "--leading-terms"])
        .env("NCINV_MAX_DEGREE", "4")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("degree 4"));
    assert!(!text.contains("degree 5"));

    let bad = Command::new(env!("CARGO_BIN_EXE_ncinv"))
        .args(["gens", "--n", "3", "--leading-terms"])
        .env("NCINV_MAX_DEGREE", "forty")
        .output()
        .expect("binary runs");
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());

    // explicit flag wins over the environment
    let flag = Command::new(env!("CARGO_BIN_EXE_ncinv"))
        .args(["gens", "--n", "3", "--leading-terms", "--max-degree", "3"])
        .env("NCINV_MAX_DEGREE", "5")
        .output()
        .expect("binary runs");
    let text = String::from_utf8(flag.stdout).unwrap();
    assert!(text.contains("degree 3") && !text.contains("degree 4"));
}
