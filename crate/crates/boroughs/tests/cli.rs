//! End-to-end checks of the command line binary: output shapes and the
//! exit code contract (0 ok, 1 input error, 2 budget exhausted).

use std::path::PathBuf;
use std::process::{Command, Output};

fn karate() -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("data/zachary.edges");
    p.to_string_lossy().into_owned()
}

fn collab() -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("data/collab.pairs");
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boroughs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn boroughs_text_report() {
    let out = run(&["boroughs", &karate()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("2 boroughs, 1 outback edge"));
    assert!(text.contains("borough 0: 28 nodes, 67 edges, diameter 4"));
    assert!(text.contains("outback bridges: 1-12"));
}

#[test]
fn boroughs_dot_output() {
    let out = run(&["boroughs", &karate(), "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("graph boroughs {"));
    assert!(text.contains("style=dashed"));
    assert!(text.contains("style=solid"));
}

#[test]
fn boroughs_json_output() {
    let out = run(&["boroughs", &karate(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["graph"]["node_count"], 34);
    assert_eq!(parsed["boroughs"].as_array().unwrap().len(), 2);
}

#[test]
fn clubs_csv_for_one_borough() {
    let out = run(&["clubs", &karate(), "--scope", "borough=0", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "scope,type,size,separable,members");
    assert_eq!(lines.len(), 1 + 13);
}

#[test]
fn clubs_text_lists_types() {
    let out = run(&["clubs", &karate()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 14);
    assert!(text.contains("coterie"));
    assert!(text.contains("social circle"));
    assert!(text.contains("hamlet"));
    assert!(text.contains("[borough 1] social circle"));
}

#[test]
fn stats_summarizes_graph_and_distribution() {
    let out = run(&["stats", &karate()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("34 nodes, 78 edges, 1 component"));
    assert!(text.contains("2 boroughs, 1 outback edge"));
    assert!(text.contains("coterie"));
}

#[test]
fn query_membership_profile() {
    let out = run(&["query", &karate(), "--node", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("node 9 is in 8 of 13 clubs"));
}

#[test]
fn query_co_membership() {
    let out = run(&["query", &karate(), "--node", "1", "--node", "34"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("together in 3 clubs"));
}

#[test]
fn query_unknown_node_exits_1() {
    let out = run(&["query", &karate(), "--node", "99"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not in the graph"));
}

#[test]
fn project_writes_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let dest = dir.path().join("projected.edges");
    let out = run(&[
        "project",
        &collab(),
        "--threshold",
        "2",
        "--out",
        dest.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&dest).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert!(text.contains("ana bo"));

    let out = run(&["project", &collab(), "--threshold", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 8);
}

#[test]
fn malformed_edge_file_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.edges");
    std::fs::write(&bad, "a b c\n").unwrap();
    let out = run(&["boroughs", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}

#[test]
fn missing_file_exits_1() {
    let out = run(&["stats", "/nonexistent/thing.edges"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exhausted_branch_budget_exits_2() {
    let out = run(&["clubs", &karate(), "--branch-budget", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn bad_flag_value_exits_1() {
    let out = run(&["clubs", &karate(), "--scope", "bogus"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_0() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("boroughs"));
}
