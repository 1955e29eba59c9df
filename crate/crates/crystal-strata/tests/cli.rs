//! End-to-end tests of the `crystal-strata` binary: exit codes, output
//! determinism, and the frozen JSON surfaces.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crystal-strata"))
        .args(args)
        .env_remove("CRYSTAL_SM_SCALE_OVERRIDE")
        .output()
        .expect("binary runs")
}

#[test]
fn example_passes_and_is_deterministic() {
    let first = run(&["example"]);
    assert!(first.status.success(), "{:?}", first);
    let second = run(&["example"]);
    assert_eq!(first.stdout, second.stdout, "output must be byte-identical");
    let text = String::from_utf8(first.stdout).unwrap();
    assert!(text.contains("PASS: 0 diffs"), "{text}");
    assert!(text.contains("lambda_b    = (2,2,3,2,3)"), "{text}");
}

#[test]
fn example_json_has_frozen_fields() {
    let out = run(&["example", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["schema_version"], "1");
    assert_eq!(value["pass"], true);
    assert_eq!(value["lambda_b"], serde_json::json!([2, 2, 3, 2, 3]));
    assert_eq!(
        value["xi_tuple"],
        serde_json::json!([
            [0, 1, 2, 0, 2],
            [0, 2, 2, 0, 2],
            [1, 3, 2, 1, 2],
            [2, 4, 2, 2, 3]
        ])
    );
}

#[test]
fn construct_emits_one_report_per_tableau() {
    let out = run(&[
        "construct",
        "--n",
        "5",
        "--m",
        "12",
        "--mu",
        "4,3,3,2,0",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let header: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(header["n"], 5);
    assert_eq!(header["m"], 12);
    assert_eq!(header["shift"], 0);
    let count = header["count"].as_u64().unwrap();
    let reports: Vec<serde_json::Value> = lines
        .map(|line| serde_json::from_str(line).unwrap())
        .collect();
    assert_eq!(reports.len() as u64, count);
    assert!(count >= 1);
    for report in &reports {
        let obj = report.as_object().unwrap();
        for key in ["b", "fe", "w_tuple", "w_of_b", "upsilon", "xi", "eta_class"] {
            assert!(obj.contains_key(key), "missing {key}");
        }
        assert_eq!(report["upsilon"].as_array().unwrap().len(), 5);
        // d = mu(1) = 4 word-tuple entries and column factors.
        assert_eq!(report["w_tuple"].as_array().unwrap().len(), 4);
        assert_eq!(report["fe"].as_array().unwrap().len(), 4);
    }
    // The displayed tableau from the worked example appears with its tuple.
    let sample = reports.iter().find(|r| {
        r["b"]["rows"] == serde_json::json!([[1, 1, 3, 3], [2, 2, 4], [3, 4, 5], [5, 5]])
    });
    let sample = sample.expect("sample tableau present");
    assert_eq!(
        sample["xi"]["5,3,2,4,1"],
        serde_json::json!([
            [0, 1, 2, 0, 2],
            [0, 2, 2, 0, 2],
            [1, 3, 2, 1, 2],
            [2, 4, 2, 2, 3]
        ])
    );
}

#[test]
fn verify_smallest_case_exits_zero() {
    let out = run(&["verify", "--n", "2", "--m", "1", "--mu", "1,0"]);
    assert!(out.status.success(), "{:?}", out);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0 failed"), "{text}");
}

#[test]
fn census_small_grid_agrees() {
    let out = run(&["census", "--n", "3", "--m", "4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n\tm\tmu\tkostka\tclasses_constructed\tclasses_bruteforce\tagree"
    );
    let mut rows = 0;
    for line in lines {
        assert!(line.ends_with("\ttrue"), "{line}");
        rows += 1;
    }
    assert!(rows >= 6, "expected several grid rows, got {rows}");
}

#[test]
fn crystal_graph_export() {
    let out = run(&["crystal", "--n", "3", "--mu", "2,1,0", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["elements"].as_array().unwrap().len(), 8);
    let edges = value["edges"].as_array().unwrap();
    assert!(!edges.is_empty());
    for edge in edges {
        assert!(edge["from"].is_u64());
        assert!(edge["to"].is_u64());
        let i = edge["i"].as_u64().unwrap();
        assert!(i == 1 || i == 2);
    }
}

#[test]
fn config_errors_exit_two() {
    // Sum of mu differs from m.
    let out = run(&["construct", "--n", "3", "--m", "4", "--mu", "2,1,0"]);
    assert_eq!(out.status.code(), Some(2), "{:?}", out);
    // Non-coprime pair.
    let out = run(&["construct", "--n", "4", "--m", "2", "--mu", "1,1,0,0"]);
    assert_eq!(out.status.code(), Some(2));
    // Non-dominant mu.
    let out = run(&["construct", "--n", "3", "--m", "4", "--mu", "1,3,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scale_guard_breach_exits_two_and_env_lifts_it() {
    let out = run(&["crystal", "--n", "3", "--mu", "9,6,0"]);
    assert_eq!(out.status.code(), Some(2), "{:?}", out);
    let lifted = Command::new(env!("CARGO_BIN_EXE_crystal-strata"))
        .args(["crystal", "--n", "3", "--mu", "9,6,0"])
        .env("CRYSTAL_SM_SCALE_OVERRIDE", "1")
        .output()
        .expect("binary runs");
    assert!(lifted.status.success(), "{:?}", lifted);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("crystal-strata-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("example.json");
    let out = run(&[
        "example",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["pass"], true);
    std::fs::remove_file(&path).ok();
}
