use std::path::Path;
use std::process::{Command, Output};

fn adams(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adams")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = adams(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn group_queries() {
    assert_eq!(stdout(&["group", "--spectrum", "kR", "--degree", "0-1s"]), "(Z/2)^1, basis: as\n");
    assert_eq!(stdout(&["group", "--spectrum", "kR", "--degree", "4-4s"]), "Z^1, basis: u2s^2\n");
    assert_eq!(stdout(&["group", "--spectrum", "kR", "--degree", "0+0s"]), "Z^1, basis: 1\n");
    assert_eq!(stdout(&["group", "--spectrum", "kR", "--degree", "3+5s"]), "0\n");
    assert_eq!(adams(&["group", "--spectrum", "kR", "--degree", "40+0s"]).status.code(), Some(2));
    assert_eq!(adams(&["group", "--spectrum", "kO", "--degree", "0+0s"]).status.code(), Some(2));
}

#[test]
fn act_values() {
    let out = adams(&["act", "--spectrum", "TMF13", "--k", "5", "--element", "a3b"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "125*a3b\n");
    assert_eq!(String::from_utf8_lossy(&out.stderr), "inverted 5\n");
    assert_eq!(stdout(&["act", "--spectrum", "KR", "--k", "3", "--element", "as^2"]), "as^2\n");
    let out = adams(&["act", "--spectrum", "KR", "--k", "-1", "--element", "ub"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "-ub\n");
    assert!(out.stderr.is_empty());
    assert_eq!(adams(&["act", "--spectrum", "KR", "--k", "0", "--element", "ub"]).status.code(), Some(2));
    assert_eq!(adams(&["act", "--spectrum", "KR", "--k", "3", "--element", "ub + as"]).status.code(), Some(2));
}

#[test]
fn chart_matches_golden() {
    let kr = stdout(&["chart", "--spectrum", "kR"]);
    assert_eq!(kr, golden("kr_connective.csv"));
    assert!(kr.lines().any(|l| l == "0,-1,0,1,,as"));
    assert!(kr.lines().any(|l| l == "1,1,1,0,ub,"));
    assert!(kr.lines().any(|l| l == "3,5,0,0,,"));
    assert_eq!(stdout(&["chart", "--spectrum", "tmf13"]), golden("tmf13_connective.csv"));
}

#[test]
fn chart_window_and_ascii() {
    let csv = stdout(&["chart", "--spectrum", "KR", "--window", "0:1,-1:0"]);
    assert_eq!(csv.lines().count(), 5);
    let art = stdout(&["chart", "--spectrum", "kR", "--window", "-1:1,-1:1", "--format", "ascii"]);
    assert_eq!(art, "   1 ..Z\n   0 .Z2\n  -1 .22\n     a = -1..1\n");
    assert_eq!(adams(&["chart", "--spectrum", "kR", "--window", "20"]).status.code(), Some(2));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--spectrum", "KR", "--k", "3,-1", "--window", "-6:6,-6:6"];
    let first = adams(&args);
    assert_eq!(first.status.code(), Some(0));
    let text = String::from_utf8(first.stdout.clone()).unwrap();
    assert!(text.lines().all(|l| l.starts_with("CHECK ")));
    assert!(text.lines().any(|l| l.starts_with("CHECK KR/k=3/formula_window pass")));
    assert_eq!(adams(&args).stdout, first.stdout);
}

#[test]
fn verify_tmf_warns_once() {
    let out = adams(&["verify", "--spectrum", "tmf13", "--k", "5", "--window", "-4:4,-4:4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains(" warn")).count(), 1);
    assert_eq!(adams(&["verify", "--spectrum", "nope"]).status.code(), Some(2));
}
