use std::fs;
use std::path::Path;
use std::process::Command;

use turan::cli::run_with;

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["turan"];
    argv.extend_from_slice(args);
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const STAR: &str = "6 2\n1 2\n1 3\n1 4\n1 5\n1 6\n";

#[test]
fn detect_on_a_star() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "star.fam", STAR);
    let (code, out, _) = run(&["detect", "--family", &f, "--forbid", "matching(2)"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "none");

    let (code, out, _) = run(&["detect", "--family", &f, "--forbid", "path(2)", "--engine", "oracle"]);
    assert_eq!(code, 0);
    assert_ne!(out.trim(), "none");
    // a copy was asked not to exist
    let (code, _, _) = run(&["detect", "--family", &f, "--forbid", "path(2)", "--expect-free"]);
    assert_eq!(code, 1);
}

#[test]
fn junta_on_a_star() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "star.fam", STAR);
    let (code, out, _) = run(&["junta", "--family", &f, "--s", "1", "--r", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("J = {1}"));
    assert!(out.contains("junta = {{1}}"));
    assert!(out.contains("defect = 0 "));
}

#[test]
fn solve_json_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let args = |p: &str| vec!["solve".to_string(), "--n=5".into(), "--k=2".into(), "--forbid=matching(2)".into(), "--all-optima".into(), format!("--json={p}")];
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv: Vec<String> = std::iter::once("turan".to_string()).chain(args(p.to_str().unwrap())).collect();
        assert_eq!(run_with(argv, &mut out, &mut err), 0);
    }
    let (ja, jb) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(ja, jb);
    let v: serde_json::Value = serde_json::from_slice(&ja).unwrap();
    assert_eq!(v["max_size"], 4);
    assert_eq!(v["witness_count"], 5);
    assert_eq!(v["optima_classification"], "(1,1)-star");
    assert!(v["ms"].is_null());
    let text = String::from_utf8(ja).unwrap();
    let keys = ["\"n\"", "\"k\"", "\"spec\"", "\"max_size\"", "\"witness_count\"", "\"witnesses\"", "\"optima_classification\"", "\"nodes\"", "\"ms\""];
    let pos: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let dup = write(dir.path(), "dup.fam", "4 2\n1 2\n1 2\n");
    let big = write(dir.path(), "big.fam", "4 2\n1 9\n");
    let short = write(dir.path(), "short.fam", "4 2\n1 2 3\n");
    for f in [&dup, &big, &short] {
        let (code, _, err) = run(&["detect", "--family", f, "--forbid", "matching(2)"]);
        assert_eq!(code, 2, "{f}: {err}");
    }
    assert_eq!(run(&["detect", "--family", "/nonexistent.fam", "--forbid", "matching(2)"]).0, 2);
    assert_eq!(run(&["solve", "--n", "5", "--k", "2", "--forbid", "matching(("]).0, 2);
    assert_eq!(run(&["solve", "--n", "5"]).0, 2);
}

#[test]
fn build_then_detect_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("t1.fam");
    let out_str = out_path.to_str().unwrap();
    let (code, _, err) = run(&["build", "--n", "6", "--k", "2", "--kind", "t1", "--t", "2", "--out", out_str]);
    assert_eq!(code, 0, "{err}");
    let text = fs::read_to_string(&out_path).unwrap();
    assert_eq!(text.lines().count(), 1 + 9);
    let (code, out, _) = run(&["detect", "--family", out_str, "--forbid", "matching(3)", "--expect-free"]);
    assert_eq!((code, out.trim()), (0, "none"));
}

#[test]
fn node_budget_exhaustion_exits_3() {
    let status = Command::new(env!("CARGO_BIN_EXE_turan"))
        .args(["solve", "--n", "7", "--k", "3", "--forbid", "matching(2)"])
        .env("TURAN_NODE_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&status.stderr).contains("budget"));
}
