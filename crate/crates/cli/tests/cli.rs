use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn mroman(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mroman"))
        .args(args)
        .env_remove("MR_SIZE_GUARD")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).lines().next().unwrap()).unwrap()
}

#[test]
fn solve_pr_star_cycle_four() {
    let o = mroman(&["solve", "--gamma", "pr-star", "--cycle", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["gamma_pr_star"]["optimum"], 5);
    assert_eq!(v["gamma_pr_star"]["mixed"]["weight"], 5);
    assert!(v.get("gamma_r").is_none());
}

#[test]
fn solve_r_star_path_seven() {
    let o = mroman(&["solve", "--gamma", "r-star", "--path", "7"]);
    assert_eq!(json(&o)["gamma_r_star"]["optimum"], 7);
}

#[test]
fn solve_edgeless_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty4.el");
    std::fs::write(&path, "4 0\n").unwrap();
    let o = mroman(&["solve", "--gamma", "pr", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["gamma_pr"]["optimum"], 4);
    assert_eq!(v["gamma_pr"]["labels"], serde_json::json!([1, 1, 1, 1]));
    assert_eq!(v["gamma_pr"]["two_set"], serde_json::json!([]));
}

#[test]
fn solve_all_four_by_default() {
    let o = mroman(&["solve", "--graph6", "A_"]);
    let v = json(&o);
    for key in ["gamma_r", "gamma_pr", "gamma_r_star", "gamma_pr_star"] {
        assert_eq!(v[key]["optimum"], 2, "{key}");
    }
}

#[test]
fn parse_error_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("loop.el");
    std::fs::write(&path, "2 1\n0 0\n").unwrap();
    let o = mroman(&["solve", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("self-loop"));

    assert_eq!(mroman(&["solve", "--cycle", "2"]).status.code(), Some(2));
    assert_eq!(mroman(&["solve", "--graph6", "A"]).status.code(), Some(2));
}

#[test]
fn size_guard_exit_code_and_override() {
    let o = mroman(&["solve", "--gamma", "r-star", "--complete", "7"]);
    assert_eq!(o.status.code(), Some(3));

    let o = Command::new(env!("CARGO_BIN_EXE_mroman"))
        .args(["solve", "--gamma", "r-star", "--complete", "7"])
        .env("MR_SIZE_GUARD", "30")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["gamma_r_star"]["optimum"], 7);

    let o = mroman(&["--size-guard", "65", "solve", "--path", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_cycles_and_path() {
    let o = mroman(&["check", "--cycle", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["equal"], true);
    assert_eq!(v["theorem_consistent"], true);
    assert!(v["witness"].is_object());

    let v = json(&mroman(&["check", "--cycle", "5"]));
    assert_eq!((v["gamma_r_star"].as_u64(), v["gamma_pr_star"].as_u64()), (Some(5), Some(6)));
    assert_eq!(v["equal"], false);
    assert!(v["witness"].is_null());
    assert_eq!(v["theorem_consistent"], true);

    let v = json(&mroman(&["check", "--path", "3"]));
    assert_eq!(v["equal"], true);
    assert_eq!(v["witness"]["weight"], 3);
    assert_eq!(v["claims_audit"]["exists_all_hold"], true);
}

#[test]
fn construct_outputs() {
    let o = mroman(&["construct", "--cycle", "9"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["weight"], 9);
    assert_eq!(v["vertex_labels"].as_array().unwrap().len(), 9);
    assert_eq!(v["edge_labels"].as_array().unwrap().len(), 9);

    let v = json(&mroman(&["construct", "--path", "5"]));
    assert_eq!(v["weight"], 5);
    assert_eq!(v["vertex_labels"], serde_json::json!([0, 0, 1, 0, 0]));

    assert_eq!(mroman(&["construct", "--path", "1"]).status.code(), Some(2));
}

#[test]
fn open_problem_rows() {
    let o = mroman(&["open-problems", "--complete", "--max", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[0].starts_with("K_2\t") && rows[0].ends_with("\t2"));
    assert!(rows[1].starts_with("K_3\t") && rows[1].ends_with("\t3"));

    let o = mroman(&["open-problems", "--complete-bipartite", "--max", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1 + 12);
}

#[test]
fn survey_connected_up_to_six() {
    let o = mroman(&["survey", "--file", data("connected_le6.g6").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.ends_with("# graphs=143 checked=143 violations=0 parse_errors=0 guard_errors=0\n"));
}

#[test]
fn survey_random_kim() {
    let o = Command::new(env!("CARGO_BIN_EXE_mroman"))
        .args(["survey", "--random", "200", "--max-n", "9", "--seed", "3", "--kim-only"])
        .env("MR_SIZE_GUARD", "64")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("violations=0"));
}

#[test]
fn survey_continues_past_corrupt_lines() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mixed.g6");
    std::fs::write(&path, "A_\nnot graph6!\nB?\n").unwrap();
    let o = mroman(&["survey", "--file", path.to_str().unwrap(), "--output", "json"]);
    assert_ne!(o.status.code(), Some(0));
    let lines: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0]["status"], "checked");
    assert_eq!(lines[1]["status"], "parse_error");
    assert_eq!(lines[2]["status"], "checked");
    assert_eq!(lines[3]["parse_errors"], 1);
}

#[test]
fn identical_config_identical_output() {
    let args = ["survey", "--random", "60", "--max-n", "6", "--seed", "11"];
    let a = mroman(&args);
    let b = mroman(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), b.status.code());

    let a = mroman(&["solve", "--complete-bipartite", "2", "3"]);
    let b = mroman(&["solve", "--complete-bipartite", "2", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn middle_graph_json() {
    let v = json(&mroman(&["middle", "--path", "3"]));
    assert_eq!(v["order"], 5);
    assert_eq!(v["size"], 5);
    assert_eq!(v["elements"][3], serde_json::json!({"kind": "subdivision", "index": 0}));
}
