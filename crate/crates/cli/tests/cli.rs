//! End-to-end runs of the `fcid` binary: output shapes and the exit-code
//! contract (0 ok, 1 defect found, 2 invalid input, 3 size cap).

use std::path::PathBuf;
use std::process::{Command, Output};

fn fcid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fcid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("fcid-cli-test-{}-{name}", std::process::id()));
    path
}

#[test]
fn dist_and_lcs_golden() {
    let out = fcid(&["dist", "101", "010"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("d_ID(101, 010) = 2"));

    let out = fcid(&["--json", "dist", "000010111", "111100000"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["insdel_distance"], 8);

    let out = fcid(&["lcs", "000000", "110100"]);
    assert!(stdout(&out).contains("= 3"));
}

#[test]
fn invalid_word_is_exit_two() {
    let out = fcid(&["dist", "10x", "010"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn size_cap_is_exit_three() {
    let out = fcid(&["--max-k", "4", "oracle", "--function", "vt:6", "--t", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn sphere_and_ball() {
    let out = fcid(&["sphere", "del", "101", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("3 words"));
    for w in ["01", "10", "11"] {
        assert!(text.contains(w));
    }

    let out = fcid(&["ball", "00", "2"]);
    assert!(stdout(&out).contains("3 words"));

    let out = fcid(&["ball", "00", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn matrix_search_verify_pipeline() {
    let matrix_path = tmp("type2.json");
    let out = fcid(&[
        "matrix",
        "--function",
        "vt:2",
        "--t",
        "1",
        "--kind",
        "type2",
        "--function-level",
        "--out",
        matrix_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = fcid(&[
        "--json",
        "search",
        "--matrix",
        matrix_path.to_str().unwrap(),
        "--mode",
        "type2",
        "--anchor",
        "2",
        "--cap",
        "8",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["min_length"], 6);

    // The published three-word code satisfies the same matrix.
    let out = fcid(&[
        "verify",
        "--matrix",
        matrix_path.to_str().unwrap(),
        "--words",
        "000000,000111,110100",
    ]);
    assert_eq!(out.status.code(), Some(0));

    // A weakened assignment is reported with the violating pair.
    let out = fcid(&[
        "verify",
        "--matrix",
        matrix_path.to_str().unwrap(),
        "--words",
        "000000,000111,000011",
    ]);
    assert_eq!(out.status.code(), Some(1));

    let _ = std::fs::remove_file(&matrix_path);
}

#[test]
fn failing_construction_is_exit_one_with_counterexample() {
    let out = fcid(&["construct", "runs-smod", "--k", "2", "--t", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("counterexample"));
}

#[test]
fn construct_verify_simulate_round_trip() {
    let enc_path = tmp("encoder.json");
    let out = fcid(&[
        "construct",
        "from-code",
        "--function",
        "vt:2",
        "--t",
        "1",
        "--code",
        "000000,000111,110100",
        "--out",
        enc_path.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );

    let out = fcid(&[
        "verify",
        "--encoder",
        enc_path.to_str().unwrap(),
        "--function",
        "vt:2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("distance: pass"));
    assert!(text.contains("deletion-sets: pass"));
    assert!(text.contains("insertion-sets: pass"));

    let out = fcid(&[
        "simulate",
        "--encoder",
        enc_path.to_str().unwrap(),
        "--function",
        "vt:2",
        "--exhaustive",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("rate 1.000000"));

    // Seeded random runs are reproducible.
    let a = fcid(&[
        "--seed",
        "7",
        "simulate",
        "--encoder",
        enc_path.to_str().unwrap(),
        "--function",
        "vt:2",
        "--trials",
        "300",
    ]);
    let b = fcid(&[
        "--seed",
        "7",
        "simulate",
        "--encoder",
        enc_path.to_str().unwrap(),
        "--function",
        "vt:2",
        "--trials",
        "300",
    ]);
    assert_eq!(stdout(&a), stdout(&b));

    let _ = std::fs::remove_file(&enc_path);
}

#[test]
fn bracket_and_oracle() {
    let out = fcid(&["bracket", "--function", "vt:2", "--t", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("<= r <= 6"));

    let out = fcid(&["--json", "oracle", "--function", "runs:2", "--t", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["optimal_redundancy"], 2);
}

#[test]
fn bound_commands() {
    let out = fcid(&["bound", "runs-lower", "--t", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("11/4"));

    let out = fcid(&["bound", "sphere", "--x", "0101", "--t", "1"]);
    assert!(stdout(&out).contains("[4,"));

    let out = fcid(&["bound", "sum-check", "--code", "0,1", "--v", "01"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn custom_table_function_end_to_end() {
    // A user-defined function over k = 2: first bit.
    let table_path = tmp("table.tsv");
    std::fs::write(&table_path, "00\t0\n01\t0\n10\t1\n11\t1\n").unwrap();
    let spec = format!("table:{}", table_path.display());

    let out = fcid(&["--json", "oracle", "--function", &spec, "--t", "1"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(v["optimal_redundancy"].as_u64().unwrap() >= 1);

    let out = fcid(&["bracket", "--function", &spec, "--t", "1"]);
    assert_eq!(out.status.code(), Some(0));

    // Incomplete tables are invalid input.
    std::fs::write(&table_path, "00\t0\n01\t0\n").unwrap();
    let out = fcid(&["oracle", "--function", &spec, "--t", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let _ = std::fs::remove_file(&table_path);
}

#[test]
fn over_budget_simulation_reports_losses_without_defect_exit() {
    let enc_path = tmp("two-color.json");
    let out = fcid(&[
        "construct", "two-color",
        "--function", "vt:1",
        "--t", "1",
        "--out", enc_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    // Corrupt beyond the design budget: losses are counted, exit stays 0
    // because no wrong value or mixed candidate set appears for this code.
    let out = fcid(&[
        "simulate",
        "--encoder", enc_path.to_str().unwrap(),
        "--function", "vt:1",
        "--exhaustive",
        "--channel-t", "2",
    ]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(!text.contains("rate 1.000000"), "{text}");

    let _ = std::fs::remove_file(&enc_path);
}

#[test]
fn gv_and_matrix_bounds() {
    let matrix_path = tmp("type1.json");
    let out = fcid(&[
        "matrix",
        "--function",
        "vt:2",
        "--t",
        "1",
        "--kind",
        "type1",
        "--out",
        matrix_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));

    let out = fcid(&[
        "--json",
        "gv",
        "--matrix",
        matrix_path.to_str().unwrap(),
        "--numeric",
        "--cap",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let greedy = v["greedy_length"].as_u64().unwrap();
    let numeric = v["numeric_bound"].as_u64().unwrap();
    let exact = 2; // minimum length for the vt:2 type-1 matrix over all messages
    assert!(greedy >= exact && numeric >= exact);

    let out = fcid(&["--json", "bound", "hamming", "--matrix", matrix_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["direction"], "lower");

    let out = fcid(&["bound", "plotkin", "--matrix", matrix_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("plotkin-supersequence"));

    let _ = std::fs::remove_file(&matrix_path);
}
