use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use retla::corpus::{ex44, sl2};
use retla::io::{load, save};
use retla::{AnyAlgebra, F2, F5};

fn retla(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_retla")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, g: AnyAlgebra) -> String {
    let path = dir.join(name);
    save(&g, &path).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "ex44.json", ex44::<F2>().into());
    let o = retla(&["check", &good]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("valid"));

    let bad = dir.path().join("bad.json");
    fs::write(&bad, r#"{"name": "a", "p": 3, "dim": 2, "basis": ["x", "y"], "brackets": [[0, 1, 0, 1]], "pmap": {"x": [[0, 1]]}}"#).unwrap();
    assert_eq!(retla(&["check", bad.to_str().unwrap()]).status.code(), Some(1));

    let schema = dir.path().join("schema.json");
    fs::write(&schema, r#"{"name": "a", "p": 4, "dim": 1, "basis": ["x"]}"#).unwrap();
    let o = retla(&["check", schema.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("`p`"));

    assert_eq!(retla(&["check", dir.path().join("missing.json").to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(retla(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(retla(&["verify", &good, "--theorems", "nonsense"]).status.code(), Some(3));
}

#[test]
fn verify_reports() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "ex44.json", ex44::<F2>().into());
    let o = retla(&["verify", &file]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 8);
    assert!(text.lines().all(|l| l.starts_with("PASS")));
    assert!(text.contains("not nilpotent, 2 maximal torals, non-central toral witness span(t)"));

    let o = retla(&["--json", "verify", &file, "--theorems", "thm1.5,lemma4.3"]);
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["claim_id"], "thm1.5");
    assert_eq!(lines[1]["status"], "pass");
    assert!(lines[0].get("millis").is_none());

    let o = retla(&["--json", "verify", &file, "--theorems", "thm1.5", "--timings"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v.get("millis").is_some());
}

#[test]
fn small_budget_is_inconclusive() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "sl2.json", sl2::<F5>().into());
    let o = retla(&["verify", &file, "--theorems", "lemma3.2", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("INCONCLUSIVE"));
}

#[test]
fn other_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "sl2.json", sl2::<F5>().into());
    for cmd in ["analyze", "cartan", "enumerate", "env"] {
        let o = retla(&[cmd, &file]);
        assert_eq!(o.status.code(), Some(0), "{cmd}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stdout.is_empty(), "{cmd}");
        let o = retla(&["--json", cmd, &file]);
        assert_eq!(o.status.code(), Some(0), "{cmd} --json");
        for line in stdout(&o).lines() {
            serde_json::from_str::<serde_json::Value>(line).unwrap_or_else(|e| panic!("{cmd}: {e}: {line}"));
        }
    }
}

#[test]
fn random_writes_loadable_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("random");
    let o = retla(&["random", "--n", "2", "--p", "7", "--count", "3", "--seed", "11", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let paths: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(paths.len(), 3);
    for p in &paths {
        let g = load(p).unwrap();
        assert_eq!(g.p(), 7);
        assert!(g.validate().is_valid());
    }
    let again = retla(&["random", "--n", "2", "--p", "7", "--seed", "11"]);
    let first = fs::read_to_string(&paths[0]).unwrap();
    assert_eq!(stdout(&again).trim(), first.trim());
    assert_eq!(retla(&["random", "--n", "2", "--p", "4"]).status.code(), Some(3));
}
