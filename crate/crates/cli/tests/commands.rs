use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_manyrobbers"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn gen_writes_edge_lists_and_graph6() {
    let out = run(&["gen", "wheel", "6"]);
    assert!(out.status.success());
    let g = manyrobbers::io::parse_graph(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!((g.n(), g.edge_count()), (6, 10));

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("h10.g6");
    let out = run(&["gen", "h-graph", "10", "--format", "graph6", "--out", file.to_str().unwrap()]);
    assert!(out.status.success());
    let g = manyrobbers::io::parse_graph(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(g, manyrobbers::families::h_graph(10).unwrap());

    // The written file is accepted as a graph argument.
    let v = json(&["capt", file.to_str().unwrap(), "--cops", "1", "--robbers", "3"]);
    assert_eq!(v["value"], 22);
}

#[test]
fn bad_input_exits_with_usage_error() {
    assert_eq!(run(&["gen", "path", "0"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "cycle", "4", "5"]).status.code(), Some(2));
    assert_eq!(run(&["capt", "no-such-graph"]).status.code(), Some(2));
    assert_eq!(run(&["capt", "p4", "--from", "0,1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
}

#[test]
fn state_cap_exits_with_code_three() {
    let out = Command::new(env!("CARGO_BIN_EXE_manyrobbers"))
        .args(["capt", "h10", "--robbers", "3"])
        .env("MANYROBBERS_STATE_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn analyze_reports_cop_numbers() {
    let c5 = json(&["analyze", "c5"]);
    assert_eq!((c5["cop_number"].as_u64(), c5["c0"].as_u64()), (Some(2), Some(2)));
    let p6 = json(&["analyze", "p6"]);
    assert_eq!(p6["dismantlable"], true);
    assert_eq!(p6["c0"], 1);
    assert_eq!(json(&["analyze", "k6"])["c0"], 3);
}

#[test]
fn capt_values() {
    assert_eq!(json(&["capt", "p5", "--cops", "1", "--robbers", "2"])["value"], 4);
    assert_eq!(json(&["capt", "c4"])["value"], "robbers_win");
    assert_eq!(json(&["capt", "p4", "--from", "0"])["value"], 3);

    let v = json(&["capt", "p5", "--robbers", "2", "--transcript"]);
    assert_eq!(v["transcript"]["outcome"]["round"], 4);
}

#[test]
fn zerovis_and_limit() {
    let v = json(&["zerovis", "star4", "--cops", "1", "--schedule"]);
    assert_eq!(v["time"], 6);
    assert_eq!(v["schedule"].as_array().unwrap().len(), 7);

    let c5 = json(&["limit", "c5", "--cops", "2", "--max-m", "6"]);
    assert_eq!(c5["verdict"]["kind"], "converged");
    assert_eq!(c5["verdict"]["limit"], 2);

    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t3.csv");
    let t3 = json(&["limit", "t3", "--cops", "1", "--max-m", "8", "--out", csv.to_str().unwrap()]);
    assert_eq!(t3["verdict"]["kind"], "divergence_evidence");
    let text = std::fs::read_to_string(csv).unwrap();
    assert_eq!(text.lines().count(), 9);
}

#[test]
fn verify_single_suite() {
    let out = run(&["verify", "--suite", "hn"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[PASS] criterion 2"), "{text}");

    let v = json(&["verify", "--suite", "formulas", "--json"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["criteria"][0]["id"], 1);
}
