use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn exact1q(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exact1q"))
        .args(args)
        .env_remove("EXACT1Q_SEED")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = exact1q(args);
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}: {}", String::from_utf8_lossy(&out.stdout)));
    (v, out.status.code().unwrap())
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("exact1q-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn classify_examples() {
    let out = exact1q(&["classify", "0110", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        r#"{"kind":"parity_pair","i":1,"j":2,"negated":0}"#
    );
    let (v, code) = json(&["classify", "maj3", "--json"]);
    assert_eq!(code, 1);
    assert_eq!(v["kind"], "not_exact_one_query");
    assert_eq!(v["dependent_count"], 3);
    let (v, code) = json(&["classify", "1100", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["kind"], "dictator");
    assert_eq!(v["negated"], 1);
}

#[test]
fn feasibility_reports_certificate() {
    let out = exact1q(&["feasibility", "0001"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "infeasible");
    let (v, code) = json(&["feasibility", "0001", "--witness", "--json"]);
    assert_eq!(code, 1);
    assert_eq!(v["verified"], true);
    assert!(v["certificate"]["set_multipliers"].is_array());
    let (v, code) = json(&["feasibility", "x1", "--witness", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["witness"], serde_json::json!([[1, 1], [0, 1]]));
}

#[test]
fn partial_feasibility_is_flagged() {
    let (v, _) = json(&["feasibility", "0**1", "--json"]);
    assert_eq!(v["note"], "necessary condition only");
}

#[test]
fn dtree_depths() {
    for (table, depth) in [
        ("0011", 1),
        ("0110", 2),
        ("and_or3", 3),
        ("parity3", 3),
        ("const1", 0),
    ] {
        let (v, code) = json(&["dtree", table, "--json"]);
        assert_eq!(code, 0);
        assert_eq!(v["depth"], depth, "{table}");
    }
}

#[test]
fn synth_then_simulate_round_trip() {
    let path = scratch("xnor.json");
    let p = path.to_str().unwrap();
    let out = exact1q(&["synth", "xnor2", "-o", p]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let (v, code) = json(&["simulate", p, "1001", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["is_exact"], true);
    assert_eq!(v["max_error"], 0.0);
    assert_eq!(v["T"], 1);
    assert_eq!(v["inputs"].as_array().unwrap().len(), 4);

    // the same circuit answers the complement with certainty of being wrong
    let (v, code) = json(&["simulate", p, "0110", "--json"]);
    assert_eq!(code, 1);
    assert_eq!(v["max_error"], 1.0);

    let (v, code) = json(&["lemma1", p, "00", "01", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["lemma1_sum_exact"], "1");
    assert_eq!(v["closed_form_matches"], true);
}

#[test]
fn synth_refuses_and() {
    let (v, code) = json(&["synth", "and2", "--json"]);
    assert_eq!(code, 1);
    assert!(v["circuit"].is_null());
}

#[test]
fn deutsch_jozsa_demo() {
    for (n, inputs) in [("2", 4), ("4", 8)] {
        let (v, code) = json(&["dj", "-n", n, "--json"]);
        assert_eq!(code, 0);
        assert_eq!(v["is_exact"], true);
        assert_eq!(v["inputs"].as_array().unwrap().len(), inputs);
    }
    assert_eq!(exact1q(&["dj", "-n", "3"]).status.code(), Some(2));
}

#[test]
fn verify_theorem_json() {
    let (v, code) = json(&["verify-theorem", "-n", "2", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(v["total_functions"], 16);
    assert_eq!(v["exact_one_query"], 6);
    assert_eq!(v["mismatches"], serde_json::json!([]));
    assert!(v.get("wall_time").is_none());
}

#[test]
fn sample_mode_honours_seed_env() {
    let run = |seed: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_exact1q"))
            .args(["verify-theorem", "-n", "5", "--sample", "50", "--json"])
            .env("EXACT1Q_SEED", seed)
            .output()
            .unwrap();
        out.stdout
    };
    assert_eq!(run("7"), run("7"));
    let v: Value = serde_json::from_slice(&run("7")).unwrap();
    assert_eq!(v["seed"], 7);
    let flag = exact1q(&[
        "verify-theorem",
        "-n",
        "5",
        "--sample",
        "50",
        "--json",
        "--seed",
        "7",
    ]);
    assert_eq!(flag.stdout, run("7"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["classify", "01x1"][..],
        &["classify"],
        &["frobnicate"],
        &["verify-theorem", "-n", "5"],
        &["simulate", "/does/not/exist.json", "01"],
        &["lemma1", "/does/not/exist.json", "0", "1"],
    ] {
        let out = exact1q(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(exact1q(&["--help"]).status.code(), Some(0));
    assert_eq!(exact1q(&["--version"]).status.code(), Some(0));
}

#[test]
fn malformed_circuit_file() {
    let path = scratch("bad.json");
    std::fs::write(
        &path,
        r#"{"n":1,"K":1,"T":1,"field":"float","unitaries":[]}"#,
    )
    .unwrap();
    let out = exact1q(&["simulate", path.to_str().unwrap(), "01"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn corpus_lists_named_tables() {
    let (v, code) = json(&["corpus", "--json"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    for name in ["and2", "xor2", "maj3", "and_or3", "parity3", "dj2", "dj4"] {
        assert!(names.contains(&name), "{name}");
    }
}
