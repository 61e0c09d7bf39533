use std::path::{Path, PathBuf};
use std::process::Command;

use semimonotone::cli::{format_matrix, run, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION};
use semimonotone::fixtures;
use semimonotone::RatMatrix;
use serde_json::Value;

fn put(dir: &Path, name: &str, text: &str) -> String {
    let p: PathBuf = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn put_matrix(dir: &Path, name: &str, a: &RatMatrix) -> String {
    put(dir, name, &format_matrix(a))
}

fn json(stdout: &str) -> Value {
    serde_json::from_str(stdout).unwrap()
}

#[test]
fn classify_tables() {
    let d = tempfile::tempdir().unwrap();
    let a = put_matrix(d.path(), "a.txt", &fixtures::e02_3x3());
    let out = run(["semimono", "classify", &a]);
    assert_eq!(out.code, EXIT_OK);
    for row in ["E0 exact order: 2", "Z: yes", "inverse-Z: yes"] {
        assert!(out.stdout.lines().any(|l| l.starts_with(row)), "missing {row}\n{}", out.stdout);
    }

    let i = put_matrix(d.path(), "i.txt", &RatMatrix::identity(3));
    let out = run(["semimono", "classify", &i]);
    assert!(out.stdout.lines().any(|l| l == "E: yes"));
    assert!(out.stdout.lines().any(|l| l.starts_with("E exact order: 0")));

    let s = put_matrix(d.path(), "s.txt", &fixtures::example_4x4_symmetric());
    let out = run(["semimono", "classify", &s]);
    for row in ["Z: no", "inverse-Z: yes", "E0 exact order: 2"] {
        assert!(out.stdout.lines().any(|l| l.starts_with(row)), "missing {row}");
    }
}

#[test]
fn reports_repeat_modulo_timing() {
    let d = tempfile::tempdir().unwrap();
    let a = put_matrix(d.path(), "a.txt", &fixtures::example_4x4_asymmetric());
    let mut first = json(&run(["semimono", "--json", "classify", &a]).stdout);
    let mut second = json(&run(["semimono", "--json", "classify", &a]).stdout);
    assert_eq!(first["schema"], "semimono-report/1");
    assert_eq!(first["input_digest"].as_str().unwrap().len(), 64);
    for r in [&mut first, &mut second] {
        r.as_object_mut().unwrap().remove("elapsed_ms");
    }
    assert_eq!(first, second);

    let args = ["semimono", "--json", "explore", "conjecture1", "--seed", "5", "--attempts", "300"];
    let mut x = json(&run(args).stdout);
    let mut y = json(&run(args).stdout);
    for r in [&mut x, &mut y] {
        r.as_object_mut().unwrap().remove("elapsed_ms");
    }
    assert_eq!(x, y);
    assert_eq!(x["command"][1], "explore");
}

#[test]
fn parse_errors_name_the_position() {
    let d = tempfile::tempdir().unwrap();
    let bad = put(d.path(), "bad.txt", "2\n1 2\n3 1/x\n");
    let out = run(["semimono", "classify", &bad]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("row 2, column 2"), "{}", out.stderr);
    let missing = d.path().join("nope.txt");
    assert_eq!(run(["semimono", "classify", missing.to_str().unwrap()]).code, EXIT_USAGE);
}

#[test]
fn audits() {
    let d = tempfile::tempdir().unwrap();
    let a = put_matrix(d.path(), "a.txt", &fixtures::e02_3x3());
    let out = run(["semimono", "--json", "audit", &a, "thm3.5"]);
    assert_eq!(out.code, EXIT_OK);
    let r = json(&out.stdout);
    assert_eq!(r["results"]["hypotheses_met"], true);
    assert!(r["results"]["conclusions"].as_array().unwrap().iter().all(|c| c["passed"] == true));

    let i = put_matrix(d.path(), "i.txt", &RatMatrix::identity(3));
    let r = json(&run(["semimono", "--json", "audit", &i, "thm3.4"]).stdout);
    assert_eq!(r["results"]["hypotheses_met"], false);

    let left = put_matrix(d.path(), "l.txt", &fixtures::nonclosure_left());
    let right = put_matrix(d.path(), "r.txt", &fixtures::e2_3x3());
    let out = run(["semimono", "--json", "audit", &left, "nonclosure", "--with", &right]);
    assert_eq!(out.code, EXIT_OK);
    let r = json(&out.stdout);
    let conclusions = r["results"]["conclusions"].as_array().unwrap();
    assert_eq!(conclusions.len(), 2);
    assert!(conclusions.iter().all(|c| c["passed"] == true));

    assert_eq!(run(["semimono", "audit", &a, "thm9.9"]).code, EXIT_USAGE);
    assert_eq!(run(["semimono", "audit", &left, "nonclosure"]).code, EXIT_USAGE);
}

#[test]
fn explore_writes_hit_files() {
    let d = tempfile::tempdir().unwrap();
    let out_dir = d.path().join("run");
    let o = out_dir.to_str().unwrap();
    let out = run(["semimono", "explore", "exact-order", "--n", "3", "--k", "2", "--seed", "7", "--attempts", "10000", "--out", o]);
    assert_eq!(out.code, EXIT_OK);
    let hits: Vec<_> = std::fs::read_dir(out_dir.join("hits")).unwrap().collect();
    assert!(!hits.is_empty());
    let first = hits[0].as_ref().unwrap().path();
    let m = semimonotone::cli::read_matrix_file(&first).unwrap();
    assert!(semimonotone::classify::exact_order(&m, semimonotone::classify::Variant::E0).unwrap().is_exact(2));
    assert!(out_dir.join("report.json").exists());

    let out = run(["semimono", "--json", "explore", "exact-order", "--n", "2", "--k", "0", "--template", "nonneg", "--seed", "1", "--attempts", "40"]);
    let r = json(&out.stdout);
    assert_eq!(r["results"]["hits"].as_array().unwrap().len(), 40);

    let out = run(["semimono", "--json", "explore", "conjecture2", "--n", "4", "--seed", "1", "--attempts", "5000"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(json(&out.stdout)["results"]["counterexamples"].as_array().unwrap().len(), 0);
}

#[test]
fn explore_argument_errors() {
    assert_eq!(run(["semimono", "explore", "conjecture1"]).code, EXIT_USAGE);
    assert_eq!(run(["semimono", "explore", "exact-order", "--seed", "1"]).code, EXIT_USAGE);
    assert_eq!(run(["semimono", "explore", "conjecture1", "--seed", "1", "--numerator", "0"]).code, EXIT_USAGE);
    assert_eq!(run(["semimono", "explore", "conjecture1", "--seed", "1", "--diagonal", "5:1"]).code, EXIT_USAGE);
    assert_eq!(run(["semimono", "explore", "conjecture1", "--seed", "1", "--template", "bogus"]).code, EXIT_USAGE);
    assert_eq!(run(["semimono", "explore", "neg-entries", "--seed", "1", "--n", "3", "--k", "3"]).code, EXIT_USAGE);
}

#[test]
fn lcp_verb() {
    let d = tempfile::tempdir().unwrap();
    let ident = put_matrix(d.path(), "i3.txt", &RatMatrix::identity(3));
    let q = put(d.path(), "q.txt", "3\n1 1 1\n");
    let r = json(&run(["semimono", "--json", "lcp", &q, &ident]).stdout);
    let sols = r["results"]["solutions"].as_array().unwrap();
    assert_eq!(sols.len(), 1);
    assert_eq!(sols[0]["z"], serde_json::json!(["0", "0", "0"]));

    let ident2 = put_matrix(d.path(), "i2.txt", &RatMatrix::identity(2));
    let q2 = put(d.path(), "q2.txt", "2\n-1 -2\n");
    let r = json(&run(["semimono", "--json", "lcp", &q2, &ident2]).stdout);
    assert_eq!(r["results"]["solutions"][0]["z"], serde_json::json!(["1", "2"]));

    let a = put_matrix(d.path(), "a.txt", &fixtures::e02_3x3());
    let qn = put(d.path(), "qn.txt", "3\n-1 -1 -1\n");
    let out = run(["semimono", "--json", "lcp", &qn, &a, "--attempts", "500", "--seed", "2"]);
    assert_eq!(out.code, EXIT_OK);
    let r = json(&out.stdout);
    assert!(r["results"]["verified"].as_array().unwrap().iter().all(|v| v == true));
    assert_eq!(r["results"]["q0"]["counterexample"], Value::Null);

    assert_eq!(run(["semimono", "lcp", &q2, &a]).code, EXIT_USAGE);
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_semimono");
    let d = tempfile::tempdir().unwrap();
    let a = put_matrix(d.path(), "a.txt", &fixtures::e02_3x3());
    let ok = Command::new(exe).args(["classify", &a]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("E0 exact order: 2"));
    let usage = Command::new(exe).args(["explore", "conjecture2"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(EXIT_USAGE));

    // a pair that does not witness non-closure fails the asserted property
    let i = put_matrix(d.path(), "i.txt", &RatMatrix::identity(3));
    let fail = Command::new(exe).args(["audit", &a, "nonclosure", "--with", &i]).output().unwrap();
    assert_eq!(fail.status.code(), Some(EXIT_VIOLATION));
}
