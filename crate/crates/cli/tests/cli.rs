//! Exit codes and outputs of the command-line tool.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ladderlink")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_passes_on_two_by_three() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "mm.json", r#"{"family":"maxminors","m":2,"n":3}"#);
    let report = dir.path().join("report.json");
    let out = run(&["verify", s(&inst), "--out", s(&report)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(json["checks"].as_array().unwrap().len(), 6);
    assert!(json["checks"].as_array().unwrap().iter().all(|c| c["status"] == "PASS"));
}

#[test]
fn coincident_corners_exit_with_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "bad.json", r#"{"family":"pfaffian","n":5,"corners":[[1,4],[1,4]],"t":[2,2]}"#);
    for cmd in ["validate", "verify"] {
        let out = run(&[cmd, s(&inst)]);
        assert_eq!(code(&out), 2);
        assert!(String::from_utf8_lossy(&out.stderr).contains("no two upper corners coincide"));
    }
}

#[test]
fn malformed_input_exits_with_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "x.json", r#"{"family":"pfaffian","n":5}"#);
    assert_eq!(code(&run(&["generators", s(&inst)])), 2);
    assert_eq!(code(&run(&["verify", s(&dir.path().join("missing.json"))])), 2);
}

#[test]
fn tampered_certificate_fails_replay() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "pf.json", r#"{"family":"pfaffian","n":6,"corners":[[1,6]],"t":[2]}"#);
    let cert = dir.path().join("cert.json");
    assert_eq!(code(&run(&["chain", s(&inst), "--out", s(&cert)])), 0);
    assert_eq!(code(&run(&["replay", s(&cert)])), 0);

    let mut json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    json["steps"][0]["c"].as_array_mut().unwrap().pop();
    let bad = write(dir.path(), "bad.json", &json.to_string());
    let out = run(&["replay", s(&bad)]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stdout).contains("C != A"));
}

#[test]
fn exhausted_budget_exits_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "pf.json", r#"{"family":"pfaffian","n":6,"corners":[[1,6]],"t":[2]}"#);
    let out = run(&["verify", s(&inst), "--budget-spairs", "1", "--json"]);
    assert_eq!(code(&out), 3);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(json["checks"].as_array().unwrap().iter().any(|c| c["status"] == "SKIPPED"));
}

#[test]
fn other_subcommands_on_one_sided_ladder() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "os.json", r#"{"family":"onesided","m":3,"n":3,"points":[[2,1],[3,2]],"t":[2,2]}"#);
    for cmd in ["validate", "generators", "groebner-check", "initial", "height", "vd"] {
        let out = run(&[cmd, s(&inst), "--field", "gf:32003"]);
        assert_eq!(code(&out), 0, "{cmd}: {}", String::from_utf8_lossy(&out.stderr));
    }
    let out = run(&["initial", s(&inst), "--json"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["squarefree"], true);
    assert_eq!(code(&run(&["height", s(&inst), "--field", "gf:4"])), 2);
}
