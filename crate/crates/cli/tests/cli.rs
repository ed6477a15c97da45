use std::path::Path;
use std::process::{Command, Output};

use bspin_core::dsl::{evaluate, render};

fn bspin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bspin")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn eval_bspin7_with_unit_atoms() {
    let out = bspin(&["eval", "BSpin(7)", "--deltas-one"]);
    assert_eq!(code(&out), 0);
    let expected = evaluate("L^-9 * (L^2-1)^-1 * (L^4-1)^-1 * (L^6-1)^-1").unwrap();
    assert_eq!(stdout(&out).trim(), render(&expected));
}

#[test]
fn eval_at_a_point() {
    let out = bspin(&["eval", "GL(2)", "--at", "3"]);
    assert_eq!((code(&out), stdout(&out).trim().to_string()), (0, "48".to_string()));
    let out = bspin(&["eval", "BSpin(3)", "--deltas-one", "--at", "2"]);
    assert_eq!(stdout(&out).trim(), "1/6");
    let out = bspin(&["eval", "BDelta(3)", "--at", "2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn eval_error_codes() {
    let out = bspin(&["eval", "Spin(7"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 6"));
    assert_eq!(code(&bspin(&["eval", "Foo(2)"])), 2);
    assert_eq!(code(&bspin(&["eval", "BG(3)"])), 2);
    assert_eq!(code(&bspin(&["eval", "1/(L+2)"])), 2);
    assert_eq!(code(&bspin(&["eval", "GL(0)"])), 2);
    assert_eq!(code(&bspin(&["eval", "-L^2"])), 0);
    assert_eq!(code(&bspin(&["frobnicate"])), 2);
    assert_eq!(code(&bspin(&["eval", "L", "--at", "1"])), 2);
}

#[test]
fn delta_summaries() {
    let out = bspin(&["delta", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("order: 8\n") && text.contains("center: 2\n") && text.contains("abelian: false"));
    let text = stdout(&bspin(&["delta", "1"]));
    assert!(text.contains("order: 4\n") && text.contains("abelian: true"));
    assert!(stdout(&bspin(&["delta", "12"])).contains("order: 8192\n"));
    assert_eq!(code(&bspin(&["delta", "0"])), 2);
    assert_eq!(code(&bspin(&["delta", "13"])), 2);
}

#[test]
fn delta_table_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("delta2.csv");
    let out = bspin(&["delta", "2", "--table", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let csv = std::fs::read_to_string(&path).unwrap();
    assert_eq!(csv.lines().count(), 9);
    assert_eq!(csv.lines().next().unwrap().matches("\",\"").count(), 8);
    assert_eq!(code(&bspin(&["delta", "9", "--table", path.to_str().unwrap()])), 2);
}

#[test]
fn bspin_formats() {
    let text = stdout(&bspin(&["bspin", "4"]));
    assert_eq!(text.trim(), render(&evaluate("BSpin(4)").unwrap()));
    let json: serde_json::Value = serde_json::from_str(&stdout(&bspin(&["bspin", "4", "--format", "json"]))).unwrap();
    assert_eq!(json["n"], 4);
    assert!(json["atoms"].as_array().unwrap().iter().any(|a| a["m"] == 3));
    assert_eq!(code(&bspin(&["bspin", "65"])), 2);
}

fn verify_json(dir: &Path, name: &str, args: &[&str]) -> (i32, String) {
    let path = dir.join(name);
    let mut full = vec!["verify"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--json", path.to_str().unwrap()]);
    let out = bspin(&full);
    (code(&out), std::fs::read_to_string(path).unwrap())
}

#[test]
fn verify_suites_pass_and_json_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    for suite in ["ring", "g2", "spin78", "tower", "finite"] {
        let (c1, a) = verify_json(dir.path(), "a.json", &[suite, "--samples", "10"]);
        let (c2, b) = verify_json(dir.path(), "b.json", &[suite, "--samples", "10"]);
        assert_eq!((c1, c2), (0, 0), "{suite}");
        assert_eq!(a, b, "{suite} JSON differs between runs");
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["suite"], suite);
        assert_eq!(v["seed"], 0);
        let ids: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
        let first = &v["checks"][0];
        for key in ["id", "status", "detail", "lhs", "rhs"] {
            assert!(first.get(key).is_some(), "{key} missing");
        }
    }
}

#[test]
fn verify_clifford_with_few_samples() {
    let dir = tempfile::tempdir().unwrap();
    let (c, json) = verify_json(dir.path(), "c.json", &["clifford", "--samples", "3", "--seed", "7"]);
    assert_eq!(c, 0);
    assert!(json.contains("\"seed\": 7"));
}

#[test]
fn verify_rejects_unsupported_q() {
    assert_eq!(code(&bspin(&["verify", "finite", "--q", "7"])), 2);
    assert_eq!(code(&bspin(&["verify", "everything"])), 2);
    assert_eq!(code(&bspin(&["verify", "ring", "--samples", "0"])), 2);
}
