use std::process::{Command, Output};

use serde_json::Value;

fn krpaths(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_krpaths")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = krpaths(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut v = args.to_vec();
    v.extend(["--format", "json"]);
    let text = stdout(&v);
    let value: Value = serde_json::from_str(&text).unwrap();
    // Canonical output: re-serializing the parsed value reproduces it byte for byte.
    assert_eq!(serde_json::to_string_pretty(&value).unwrap() + "\n", text);
    value
}

#[test]
fn rmatrix_worked_pair() {
    let args = ["rmatrix", "--left", "[[1,1,4],[2,3,5]]", "--right", "[[2,3],[3,4],[4,5]]"];
    assert_eq!(stdout(&args), "[[1,1],[2,2],[3,4]] ⊗ [[3,3,4],[4,5,5]]\nH = 3\n");
    let v = json(&args);
    assert_eq!(v["h"], 3);
    assert_eq!(v["left"], serde_json::json!([[1, 1], [2, 2], [3, 4]]));
}

#[test]
fn statistics() {
    assert_eq!(stdout(&["stat", "--name", "tau", "--path", "4312111"]).trim(), "11");
    assert_eq!(stdout(&["stat", "--name", "charge", "--path", "5417632"]).trim(), "13");
    assert_eq!(stdout(&["stat", "--name", "cocharge", "--path", "5417632"]).trim(), "8");
    let b1 = "[[1,1],[2,2],[4,5]]|[[2,3],[3,4]]|[[1,1],[3,5]]";
    assert_eq!(stdout(&["stat", "--name", "tau_rs", "--path", b1, "--r", "3", "--s", "5"]).trim(), "9");
    let v = json(&["stat", "--name", "maj_mu", "--path", "213121", "--mu", "3,2,1"]);
    assert_eq!(v["stat"], "maj_mu");
}

#[test]
fn box_ball_tables() {
    assert_eq!(stdout(&["bbs", "evolve", "--path", "1111111", "--steps", "3"]), "1 1 1 1 1 1 1\n".repeat(3));
    let t = stdout(&["bbs", "evolve", "--path", "4312111", "--steps", "7", "--alg", "ts"]);
    assert_eq!(t.lines().nth(1), Some("1 1 4 1 3 2 1"));
    assert_eq!(t.lines().count(), 7);
    let v = json(&["bbs", "evolve", "--path", "4321111", "--steps", "2"]);
    assert_eq!(v["rows"][1], serde_json::json!([1, 1, 1, 4, 3, 2, 1]));
    assert_eq!(stdout(&["bbs", "tau", "--path", "4321111"]).trim(), "7");
}

#[test]
fn polynomials() {
    let k = json(&["kostka", "--lambda", "2,2,2", "--mu", "4,2", "--macdonald"]);
    let want: Value = serde_json::from_str(r#"{"q^2 t^2":1,"q^4 t^1":1,"q^4 t^2":1,"q^5 t^1":1,"q^6 t^0":1}"#).unwrap();
    assert_eq!(k, want);
    assert_eq!(stdout(&["kostka", "--lambda", "6,4,3,1", "--parabolic", "2x2,2x2,3x2"]).trim(), "q^10 + q^9");
    assert_eq!(stdout(&["kostka", "--lambda", "2,1", "--mu", "1,1,1"]).trim(), "2");
    assert_eq!(stdout(&["kostka", "--lambda", "2,1", "--mu", "1,1,1", "--foulkes"]).trim(), "q^2 + q");
    let g = json(&["gf", "--shapes", "2x2,2x2,3x2", "--weight", "4,6,3,1"]);
    assert_eq!(g["paths"], 9);
    assert_eq!(g["poly"]["q^10"], 3);
    assert!(stdout(&["macdonald", "--mu", "2,1"]).contains("s(2,1): q + t"));
}

#[test]
fn rsk_pattern() {
    let out = stdout(&["rsk", "--matrix", "[[0,2,1,0],[0,1,0,1],[2,1,1,2]]"]);
    assert!(out.contains("P = [[1,1,2,2,3,4,4],[2,2,4],[3]]"));
    assert!(out.contains("plane partition = [[7,7,4,3],[5,3,3,1],[4,2,1,1],[2,2,1]]"));
}

#[test]
fn verify_reports() {
    let v = json(&["verify", "thm-main", "--max-size", "4", "--jobs", "2"]);
    assert_eq!(v["summary"]["fail"], 0);
    let v = json(&["verify", "hhl-kostka", "--lambda", "2,2,2", "--mu", "4,2"]);
    assert_eq!(v["reports"][0]["verdict"], "FAIL");
    let dir = std::env::temp_dir().join(format!("krpaths-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("report.json");
    let f = file.to_str().unwrap();
    let out = krpaths(&["verify", "regularization", "--weight", "1,3,3", "--format", "json", "--out", f]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(v["reports"][0]["fitted_shift"], 39);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    let out = krpaths(&["rmatrix", "--left", "[[1,x]]", "--right", "[[1]]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("[[1,x]]"));
    let out = krpaths(&["kostka", "--lambda", "1,2", "--mu", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1,2"));
    assert_eq!(krpaths(&["stat", "--name", "tau", "--path", "12", "--bogus"]).status.code(), Some(2));
    assert_eq!(krpaths(&["frobnicate"]).status.code(), Some(2));
    let out = krpaths(&["stat", "--name", "charge", "--path", "221"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    assert_eq!(krpaths(&["kostka", "--lambda", "3", "--mu", "2"]).status.code(), Some(1));
}
