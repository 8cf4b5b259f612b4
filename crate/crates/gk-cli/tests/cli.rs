//! End-to-end checks of the `gk` binary: flags, outputs and the exit-code
//! contract (0 success, 1 analysis/decode failure, 2 usage error).

use std::path::PathBuf;
use std::process::{Command, Output};

fn gk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn temp_path(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("gk-cli-test-{}-{name}", std::process::id()));
    path
}

#[test]
fn generate_edges_for_k2() {
    let out = temp_path("g2.edges");
    let result = gk(&["generate", "--k", "2", "--format", "edges", "--out", out.to_str().unwrap()]);
    assert!(result.status.success());
    assert!(stdout(&result).contains("V=14 E=21 F=9"));
    let contents = std::fs::read_to_string(&out).unwrap();
    assert_eq!(contents.lines().count(), 21);
    std::fs::remove_file(out).unwrap();
}

#[test]
fn generate_rejects_k1_as_usage_error() {
    let result = gk(&["generate", "--k", "1", "--format", "edges", "--out", "/tmp/never"]);
    assert_eq!(result.status.code(), Some(2));
}

#[test]
fn generate_io_failure_is_exit_1() {
    let result = gk(&[
        "generate",
        "--k",
        "2",
        "--format",
        "edges",
        "--out",
        "/nonexistent-dir/never.edges",
    ]);
    assert_eq!(result.status.code(), Some(1));
    assert!(stderr(&result).contains("error"));
}

#[test]
fn verify_k3_passes() {
    let result = gk(&["verify", "--k", "3"]);
    assert_eq!(result.status.code(), Some(0));
    let text = stdout(&result);
    assert!(text.contains("overall: PASS"));
    assert!(!text.contains("FAIL"));
    assert!(!text.contains("DISCREPANCY"));
}

#[test]
fn verify_k6_flags_discrepancy_but_exits_zero() {
    let result = gk(&["verify", "--k", "6", "--method", "ifub"]);
    assert_eq!(result.status.code(), Some(0));
    let text = stdout(&result);
    assert!(text.contains("diameter-3k\tdiameter = 20\t<= 3k = 18\tDISCREPANCY"));
    assert!(text.contains("overall: PASS (with discrepancies)"));
}

#[test]
fn verify_rejects_k_and_input_together() {
    let result = gk(&["verify", "--k", "3", "--input", "/tmp/whatever"]);
    assert_eq!(result.status.code(), Some(2));
}

#[test]
fn verify_corrupt_input_is_exit_1_with_diagnostics() {
    let path = temp_path("corrupt.rotdoc");
    std::fs::write(&path, "{\"version\":9,\"nonsense\":true}").unwrap();
    let result = gk(&["verify", "--input", path.to_str().unwrap()]);
    assert_eq!(result.status.code(), Some(1));
    assert!(stderr(&result).contains("error"));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn verify_roundtrips_generated_rotdoc() {
    let path = temp_path("g4.rotdoc");
    let generate = gk(&["generate", "--k", "4", "--format", "rotdoc", "--out", path.to_str().unwrap()]);
    assert!(generate.status.success());
    let result = gk(&["verify", "--input", path.to_str().unwrap(), "--method", "bfs-all"]);
    assert_eq!(result.status.code(), Some(0));
    assert!(stdout(&result).contains("overall: PASS"));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn census_k3_prints_expected_line() {
    let result = gk(&["census", "--k", "3"]);
    assert_eq!(result.status.code(), Some(0));
    assert_eq!(stdout(&result).trim(), "4:6 5:6 6:6 7:6");
}

#[test]
fn census_from_rotation_document() {
    let path = temp_path("g3.rotdoc");
    gk(&["generate", "--k", "3", "--format", "rotdoc", "--out", path.to_str().unwrap()]);
    let result = gk(&["census", "--input", path.to_str().unwrap()]);
    assert_eq!(result.status.code(), Some(0));
    assert_eq!(stdout(&result).trim(), "4:6 5:6 6:6 7:6");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn census_rejects_graph6_input() {
    let path = temp_path("g3.g6");
    gk(&["generate", "--k", "3", "--format", "graph6", "--out", path.to_str().unwrap()]);
    let result = gk(&["census", "--input", path.to_str().unwrap()]);
    assert_eq!(result.status.code(), Some(1));
    assert!(stderr(&result).contains("rotation document"));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn diameter_k2_names_the_roots() {
    let result = gk(&["diameter", "--k", "2"]);
    assert_eq!(result.status.code(), Some(0));
    assert_eq!(stdout(&result).trim(), "4 (rootA, rootB) exact");
}

#[test]
fn diameter_from_graph6_uses_plain_ids() {
    let path = temp_path("g2.g6");
    gk(&["generate", "--k", "2", "--format", "graph6", "--out", path.to_str().unwrap()]);
    let result = gk(&["diameter", "--input", path.to_str().unwrap(), "--method", "bfs-all"]);
    assert_eq!(result.status.code(), Some(0));
    assert_eq!(stdout(&result).trim(), "4 (0, 4) exact");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn diameter_double_sweep_reports_lower_bound() {
    let result = gk(&["diameter", "--k", "3", "--method", "double-sweep", "--seed", "5"]);
    assert_eq!(result.status.code(), Some(0));
    let text = stdout(&result);
    assert!(text.contains("lower-bound"));
    let value: u32 = text.split_whitespace().next().unwrap().parse().unwrap();
    assert!(value <= 8);
}

#[test]
fn refute_reports_smallest_k() {
    let result = gk(&["refute", "--k-min", "2", "--k-max", "8"]);
    assert_eq!(result.status.code(), Some(0));
    let text = stdout(&result);
    assert!(text.contains("smallest refuting k: 7"));
    let refuting = text.lines().filter(|l| l.ends_with("\ttrue")).count();
    assert_eq!(refuting, 2); // k = 7 and k = 8
}

#[test]
fn refute_json_report_is_parseable() {
    let result = gk(&["refute", "--k-min", "2", "--k-max", "5", "--report", "json"]);
    assert_eq!(result.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_str(&stdout(&result)).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 4);
    assert_eq!(rows[0]["k"], 2);
    assert_eq!(rows[0]["n"], 14);
    assert_eq!(rows[0]["diameter"], 4);
    assert!(stderr(&result).contains("no refuting k in range"));
}

#[test]
fn refute_rejects_inverted_range() {
    let result = gk(&["refute", "--k-min", "5", "--k-max", "2"]);
    assert_eq!(result.status.code(), Some(2));
}

#[test]
fn verify_json_report_matches_schema() {
    let result = gk(&["verify", "--k", "2", "--report", "json"]);
    assert_eq!(result.status.code(), Some(0));
    let entries: serde_json::Value = serde_json::from_str(&stdout(&result)).unwrap();
    let entries = entries.as_array().unwrap();
    assert_eq!(entries.len(), 6);
    for entry in entries {
        assert!(entry["id"].is_string());
        assert!(entry["measured"].is_string());
        assert!(entry["bound"].is_string());
        assert!(entry["verdict"].is_string());
    }
}

#[test]
fn render_writes_svg() {
    let path = temp_path("g2.svg");
    let result = gk(&["render", "--k", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(result.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches("<circle").count(), 14);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn outputs_are_deterministic_across_runs_and_threads() {
    let a = gk(&["refute", "--k-min", "2", "--k-max", "6", "--threads", "1"]);
    let b = gk(&["refute", "--k-min", "2", "--k-max", "6", "--threads", "4"]);
    assert_eq!(stdout(&a), stdout(&b));

    let path1 = temp_path("det1.svg");
    let path2 = temp_path("det2.svg");
    gk(&["generate", "--k", "4", "--format", "svg", "--out", path1.to_str().unwrap()]);
    gk(&["generate", "--k", "4", "--format", "svg", "--out", path2.to_str().unwrap()]);
    let svg1 = std::fs::read(&path1).unwrap();
    let svg2 = std::fs::read(&path2).unwrap();
    assert_eq!(svg1, svg2);
    std::fs::remove_file(path1).unwrap();
    std::fs::remove_file(path2).unwrap();
}
