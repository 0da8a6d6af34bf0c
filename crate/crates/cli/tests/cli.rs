use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_injword"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all);
    (
        serde_json::from_slice(&o.stdout).expect("valid JSON report"),
        o.status.code().unwrap(),
    )
}

#[test]
fn homology_of_three_letters_one_label() {
    let o = run(&["homology", "--n", "3", "--labels", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("H = [0, 0, 0, Z^2]"), "{out}");
    assert!(out.contains("d(1)_3 = 2"));
    assert!(out.trim_end().ends_with("PASS"));
}

#[test]
fn two_letters_one_label_is_a_circle() {
    let (report, code) = json(&["homology", "--n", "2", "--labels", "1"]);
    assert_eq!(code, 0);
    let h = &report["data"]["homology"];
    assert_eq!(h[2]["free_rank"], 1);
    assert_eq!(h[2]["torsion"], serde_json::json!([]));
}

#[test]
fn oversized_complex_is_a_budget_error() {
    let o = run(&["homology", "--n", "6", "--labels", "3"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("budget"));
    assert_eq!(
        run(&[
            "homology",
            "--n",
            "7",
            "--labels",
            "1",
            "--budget",
            "1000000000"
        ])
        .status
        .code(),
        Some(3)
    );
}

#[test]
fn spectral_examples() {
    let o = run(&["spectral", "--n", "3", "--labels", "1", "--letter", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("d1 = [[1]]"), "{out}");
    assert!(out.contains("E2_(0,2) = 0"));
    assert!(out.contains("[PASS] d s + s d is the inclusion of F_0"));

    let (report, code) = json(&["spectral", "--n", "2", "--labels", "2", "--letter", "1"]);
    assert_eq!(code, 0);
    assert!(report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["pass"] == true));
}

#[test]
fn letter_outside_the_alphabet_is_a_usage_error() {
    let o = run(&["spectral", "--n", "3", "--labels", "1", "--letter", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("letter 9"));
}

#[test]
fn wreath_counts() {
    let (report, code) = json(&["wreath", "--group", "cyclic:2", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(report["data"]["fixed_point_free"], 5);
    let (report, code) = json(&["wreath", "--group", "cyclic:1", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(report["data"]["fixed_point_free"], 9);
}

#[test]
fn group_files_are_validated() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(
        &bad,
        r#"{"order":3,"table":[[0,1,2],[1,0,0],[2,0,1]],"identity":0}"#,
    )
    .unwrap();
    let o = run(&[
        "wreath",
        "--n",
        "2",
        "--group",
        &format!("file:{}", bad.display()),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("associativity"), "{}", stderr(&o));

    let good = dir.path().join("klein.json");
    fs::write(
        &good,
        r#"{"order":4,"table":[[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]}"#,
    )
    .unwrap();
    let (report, code) = json(&[
        "wreath",
        "--n",
        "2",
        "--group",
        &format!("file:{}", good.display()),
    ]);
    assert_eq!(code, 0);
    // d(4)_2 = 2·16 - 2·4 + 1
    assert_eq!(report["data"]["fixed_point_free"], 25);

    assert_eq!(
        run(&["wreath", "--n", "2", "--group", "dihedral:4"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn reports_share_one_schema() {
    for args in [
        &["homology", "--n", "3", "--labels", "2"][..],
        &["spectral", "--n", "3", "--labels", "2"],
        &["wreath", "--n", "3", "--labels", "2"],
        &["verify", "--n", "2", "--labels", "2"],
    ] {
        let (report, code) = json(args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(report["command"], args[0]);
        assert!(report["params"].is_object());
        let checks = report["checks"].as_array().unwrap();
        assert!(!checks.is_empty());
        for c in checks {
            assert!(c["name"].is_string());
            assert!(c.get("expected").is_some() && c.get("actual").is_some());
            assert!(c["pass"].is_boolean());
        }
    }
}

#[test]
fn verify_default_grid_and_five_letters() {
    let o = run(&["verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["verify", "--n", "5", "--labels", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("n=5 labels=1"));
    assert!(out.contains("checks in"), "runtime is reported: {out}");
}

#[test]
fn corrupted_cache_entries_are_detected_and_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["verify", "--n", "3", "--labels", "2", "--cache", cache];
    let (first, code) = json(&args);
    assert_eq!(code, 0);
    let (second, _) = json(&args);
    assert!(second["data"]["cache"]["hits"].as_u64().unwrap() > 0);

    let entry = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .find(|p| {
            p.file_name()
                .unwrap()
                .to_str()
                .unwrap()
                .contains("-n3-l2-d3-")
        })
        .expect("top boundary is cached");
    let text = fs::read_to_string(&entry).unwrap();
    fs::write(&entry, text.replacen("\"1\"", "\"2\"", 1)).unwrap();

    let o = run(&args);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stderr(&o).contains("cache integrity error"),
        "{}",
        stderr(&o)
    );
    // the rewritten entry is clean again
    let (third, _) = json(&args);
    assert_eq!(third["data"]["cache"]["recomputed"], 0);
    assert_eq!(first["checks"], third["checks"]);
}
