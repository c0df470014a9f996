use std::io::Write;
use std::process::Command;

use cychom::report::{HomologyReport, Report, VerifyReport};

fn json(args: &[&str]) -> (Option<i32>, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cychom")).args(args).arg("--json").output().unwrap();
    (out.status.code(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn homology_json_round_trips() {
    let (c, text) = json(&["homology", "--preset", "bg:cyclic:2", "--domain", "z", "--max-degree", "4"]);
    assert_eq!(c, Some(0));
    let r: HomologyReport = serde_json::from_str(&text).unwrap();
    assert_eq!(r.betti(), [1, 0, 0, 0, 0]);
    let torsion: Vec<Vec<u64>> = r.groups.iter().map(|g| g.torsion.clone()).collect();
    assert_eq!(torsion, [vec![], vec![2], vec![], vec![2], vec![]]);
    assert_eq!(Report::Homology(r).to_json(), text.trim_end());
}

#[test]
fn tower_json() {
    let (c, text) = json(&["hc", "--preset", "productfield:2", "--variant", "periodic", "--max-degree", "3"]);
    assert_eq!(c, Some(0));
    let r: HomologyReport = serde_json::from_str(&text).unwrap();
    let tower = r.tower.as_ref().expect("tower section");
    assert_eq!(tower.flag, "STABLE");
    assert_eq!(r.betti(), [2, 0, 2, 0]);
}

#[test]
fn verify_json() {
    let (c, text) = json(&["verify", "sbi", "--preset", "unit", "--max-degree", "4"]);
    assert_eq!(c, Some(0));
    let r: VerifyReport = serde_json::from_str(&text).unwrap();
    assert!(r.passed && r.checks.iter().all(|k| k.passed && k.instances > 0));
    assert!(r.sbi.as_ref().is_some_and(|nodes| !nodes.is_empty()));
}

fn temp_json(body: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

#[test]
fn algebra_from_a_file() {
    // Q[x]/(x^2) written out by structure constants
    let f = temp_json(r#"{"dim": 2, "labels": ["1", "x"], "unit": [1, 0],
        "table": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]]}"#);
    let (c, text) = json(&["hh", "--input", f.path().to_str().unwrap(), "--max-degree", "4"]);
    assert_eq!(c, Some(0));
    let r: HomologyReport = serde_json::from_str(&text).unwrap();
    assert_eq!(r.betti(), [2, 1, 1, 1, 1]);
}

fn exit_code_of(args: &[&str]) -> Option<i32> {
    Command::new(env!("CARGO_BIN_EXE_cychom")).args(args).output().unwrap().status.code()
}

#[test]
fn malformed_algebras_are_rejected() {
    // e1 e1 = e2 and e2 e2 = e1 but e1 e2 = 0, so (e1 e1) e2 ≠ e1 (e1 e2)
    let f = temp_json(r#"{"dim": 3, "unit": [1, 0, 0], "table": [
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 0], [0, 0, 1], [0, 0, 0]],
        [[0, 0, 1], [0, 0, 0], [0, 1, 0]]]}"#);
    assert_eq!(exit_code_of(&["hh", "--input", f.path().to_str().unwrap()]), Some(2));
    let f = temp_json(r#"{"dim": 2, "unit": [1, 0], "table": [[[1, 0], [0, 1]]]}"#);
    assert_eq!(exit_code_of(&["hh", "--input", f.path().to_str().unwrap()]), Some(2));
    let f = temp_json(r#"{"kind": "torus"}"#);
    assert_eq!(exit_code_of(&["homology", "--input", f.path().to_str().unwrap()]), Some(2));
}

#[test]
fn simplicial_set_from_a_file() {
    let f = temp_json(r#"{"kind": "bg", "group": {"preset": "cyclic:3"}, "central": 1}"#);
    let p = f.path().to_str().unwrap();
    let (c, text) = json(&["homology", "--input", p, "--domain", "zp:3", "--max-degree", "3"]);
    assert_eq!(c, Some(0));
    assert_eq!(serde_json::from_str::<HomologyReport>(&text).unwrap().betti(), [1, 1, 1, 1]);
    let (c, text) = json(&["verify", "relations", "--input", p, "--max-degree", "4"]);
    assert_eq!(c, Some(0));
    assert!(serde_json::from_str::<VerifyReport>(&text).unwrap().passed);
}
