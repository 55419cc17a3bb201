use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn dichroma(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dichroma"))
        .current_dir(dir)
        .args(args)
        .env_remove("DICHROMA_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn setup() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    // The unique 3-dicritical oriented graph on 7 vertices with 20 arcs.
    fs::write(dir.path().join("g7.d6"), "&FAfG\\GrcT?\n").unwrap();
    fs::write(dir.path().join("c3.txt"), "3 3\n0 1\n1 2\n2 0\n").unwrap();
    fs::write(dir.path().join("tt3.txt"), "3 3\n0 1\n1 2\n0 2\n").unwrap();
    fs::write(dir.path().join("sat.cnf"), "c small\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n").unwrap();
    fs::write(dir.path().join("unsat.cnf"), "p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n").unwrap();
    dir
}

#[test]
fn dichi_certificate_round_trip() {
    let dir = setup();
    let o = dichroma(dir.path(), &["dichi", "g7.d6", "--cert", "cert.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "k=3");
    let cert: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("cert.json")).unwrap()).unwrap();
    assert_eq!(cert["n"], 7);
    assert_eq!(cert["k"], 3);
    let o = dichroma(dir.path(), &["verify-cert", "g7.d6", "cert.json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    fs::write(dir.path().join("bad.json"), r#"{"n":7,"k":3,"colouring":[1,1,1,1,1,1,1]}"#).unwrap();
    let o = dichroma(dir.path(), &["verify-cert", "g7.d6", "bad.json"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn dichi_decision_and_formats() {
    let dir = setup();
    let o = dichroma(dir.path(), &["dichi", "c3.txt", "--k", "1"]);
    assert!(stdout(&o).starts_with("k=1 dicolourable=false"));
    let o = dichroma(dir.path(), &["--json", "dichi", "c3.txt"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dichromatic_number"], 2);
    let o = dichroma(dir.path(), &["convert", "c3.txt", "--to", "d6"]);
    let d6 = stdout(&o);
    fs::write(dir.path().join("c3.graph"), &d6).unwrap();
    let o = dichroma(dir.path(), &["convert", "c3.graph", "--to", "arclist"]);
    assert_eq!(stdout(&o), "3 3\n0 1\n1 2\n2 0\n");
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let dir = setup();
    fs::write(dir.path().join("junk.txt"), "not a graph\n").unwrap();
    assert_eq!(dichroma(dir.path(), &["dichi", "junk.txt"]).status.code(), Some(2));
    assert_eq!(dichroma(dir.path(), &["dichi", "missing.d6"]).status.code(), Some(2));
    assert_eq!(dichroma(dir.path(), &["dichi", "sat.cnf"]).status.code(), Some(2));
    assert_eq!(dichroma(dir.path(), &["--format", "d6", "dichi", "c3.txt"]).status.code(), Some(2));
    assert_eq!(dichroma(dir.path(), &["frobnicate"]).status.code(), Some(2));
    assert_eq!(dichroma(dir.path(), &["bounds", "--surface", "Q3"]).status.code(), Some(2));
    assert_eq!(dichroma(dir.path(), &["reduce", "sat.cnf", "--mode", "planar"]).status.code(), Some(2));
    assert_eq!(dichroma(dir.path(), &["verify-paper", "--only", "13"]).status.code(), Some(2));
}

#[test]
fn critical_check_verdicts() {
    let dir = setup();
    let o = dichroma(dir.path(), &["critical-check", "g7.d6", "3", "--out", "crit.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("dicritical=true k=3 n=7 arcs=20"));
    let r: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("crit.json")).unwrap()).unwrap();
    assert_eq!(r["arcs"].as_array().unwrap().len(), 20);

    let o = dichroma(dir.path(), &["critical-check", "tt3.txt", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("reason=low_degree"));
    assert!(dir.path().join("dichroma-artifacts/criticality-report.json").exists());
}

#[test]
fn census_text_and_output() {
    let dir = setup();
    let o = dichroma(dir.path(), &["census", "3", "2", "--out", "all.d6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("n=3 k=2 total=1 min_arcs=3 unique=true"), "{text}");
    assert_eq!(fs::read_to_string(dir.path().join("all.d6")).unwrap().lines().count(), 1);
    let o = dichroma(dir.path(), &["census", "6", "3", "--filter", "edge"]);
    assert!(stdout(&o).starts_with("n=6 k=3 total=0 min_arcs=none"));
}

#[test]
fn tournaments_bound() {
    let dir = setup();
    let o = dichroma(dir.path(), &["tournaments", "6", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("holds=true"));
    let o = dichroma(dir.path(), &["tournaments", "7", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(dir.path().join("dichroma-artifacts/tournament-n7-k2.d6").exists());
}

#[test]
fn bounds_lines() {
    let dir = setup();
    let o = dichroma(dir.path(), &["bounds", "--surface", "N10"]);
    assert!(stdout(&o).starts_with("N10 c=-8 [4,4]"), "{}", stdout(&o));
    let o = dichroma(dir.path(), &["--json", "bounds", "--c-range", "-2..0"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let names: Vec<String> =
        v["bounds"].as_array().unwrap().iter().map(|r| r["surface"]["genus"].to_string()).collect();
    assert_eq!(names.len(), 5, "S1 N2 N3 S2 N4");
    let o = dichroma(dir.path(), &["bounds"]);
    assert_eq!(stdout(&o).lines().count(), 16);
    assert!(stdout(&o).starts_with("S0 c=2 [2,3]"));
}

#[test]
fn reduce_hub_and_oriented() {
    let dir = setup();
    let o = dichroma(dir.path(), &["reduce", "sat.cnf", "--verify", "--out", "red.d6", "--roles", "roles.json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("satisfiable=true dicolourable=true equivalent=true"));
    let roles: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("roles.json")).unwrap()).unwrap();
    assert_eq!(roles["variables"].as_array().unwrap().len(), 3);
    let o = dichroma(dir.path(), &["dichi", "red.d6", "--k", "2"]);
    assert!(stdout(&o).starts_with("k=2 dicolourable=true"));

    let o = dichroma(dir.path(), &["--json", "reduce", "unsat.cnf", "--gadget", "oriented", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["oriented"], true);
    assert_eq!(v["equivalence"]["satisfiable"], false);
    assert_eq!(v["equivalence"]["dicolourable"], false);
}

#[test]
fn reduce_planar_with_embedding() {
    let dir = setup();
    // One clause x1 x2 x3: the incidence graph is a star with centre 3.
    fs::write(dir.path().join("one.cnf"), "p cnf 3 1\n1 2 -3 0\n").unwrap();
    fs::write(dir.path().join("star.json"), r#"{"faces":[[3,0,3,1,3,2]]}"#).unwrap();
    let o = dichroma(dir.path(), &["reduce", "one.cnf", "--mode", "planar", "--embedding", "star.json", "--verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("equivalent=true"));
}

#[test]
fn encode_dimacs() {
    let dir = setup();
    let o = dichroma(dir.path(), &["encode", "c3.txt", "1"]);
    assert!(stdout(&o).lines().any(|l| l.starts_with("p cnf ")));
}

#[test]
fn structure_text() {
    let dir = setup();
    let o = dichroma(dir.path(), &["structure", "c3.txt"]);
    let text = stdout(&o);
    assert!(text.starts_with("n=3 m=3 blocks=1 cactus=true directed_cactus=true"), "{text}");
    assert!(text.contains("block directed_cycle [0, 1, 2]"));
}

#[test]
fn run_report_is_reproducible() {
    let dir = setup();
    let run = |name: &str| {
        let o = dichroma(dir.path(), &["--report", name, "--seed", "7", "dichi", "g7.d6"]);
        assert_eq!(o.status.code(), Some(0));
        let mut v: Value = serde_json::from_str(&fs::read_to_string(dir.path().join(name)).unwrap()).unwrap();
        v.as_object_mut().unwrap().remove("timings");
        v
    };
    let (a, b) = (run("r1.json"), run("r2.json"));
    assert_eq!(a["results"], b["results"]);
    assert_eq!(a["inputs_digest"], b["inputs_digest"]);
    assert_eq!(a["seed"], 7);
    assert_eq!(a["command"], "dichi");
    assert_eq!(a["inputs"][0]["path"], "g7.d6");
}

#[test]
fn jobs_from_environment() {
    let dir = setup();
    let o = Command::new(env!("CARGO_BIN_EXE_dichroma"))
        .current_dir(dir.path())
        .args(["census", "4", "2"])
        .env("DICHROMA_JOBS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_dichroma"))
        .current_dir(dir.path())
        .args(["census", "4", "2"])
        .env("DICHROMA_JOBS", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_paper_subset() {
    let dir = setup();
    let o = dichroma(dir.path(), &["verify-paper", "--only", "1,4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.trim_start().starts_with("1  PASS")), "{text}");
    assert!(text.contains("2 passed, 0 failed"));
}
