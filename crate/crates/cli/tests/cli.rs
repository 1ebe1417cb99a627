use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isotemporal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn network_file(json: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

const KEY_CHAIN: &str = r#"{
  "vertices": ["A", "B", "C", "D", "E"],
  "edges": [
    {"u": "A", "v": "D", "t": 1},
    {"u": "D", "v": "B", "t": 4},
    {"u": "B", "v": "C", "t": 2},
    {"u": "C", "v": "E", "t": 5},
    {"u": "E", "v": "A", "t": 3}
  ]
}"#;

#[test]
fn count_prints_the_integer() {
    let o = run(&["count", "--n", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1\n");
    let o = run(&["count", "--n", "7"]);
    assert_eq!(stdout(&o), "9\n");
}

#[test]
fn count_twelve_is_the_formula_value() {
    // the closed formula value; the true class count is 191
    let o = run(&["count", "--n", "12"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "189\n");
    let o = run(&["count", "--n", "12", "--method", "burnside"]);
    assert_eq!(stdout(&o), "191\n");
}

#[test]
fn count_below_three_is_a_usage_error() {
    let o = run(&["count", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error:"));
    assert_eq!(run(&["count", "--n", "x"]).status.code(), Some(2));
}

#[test]
fn sequence_rows() {
    let o = run(&["sequence", "--from", "3", "--to", "7"]);
    assert_eq!(stdout(&o), "n,count\n3,1\n4,3\n5,3\n6,8\n7,9\n");
    let o = run(&["sequence", "--from", "5", "--to", "5"]);
    assert_eq!(stdout(&o), "n,count\n5,3\n");
    let o = run(&["sequence", "--from", "4", "--to", "5", "--ratios"]);
    assert_eq!(stdout(&o), "n,count,ratio\n4,3,3.000000\n5,3,1.000000\n");
    assert_eq!(
        run(&["sequence", "--from", "7", "--to", "5"]).status.code(),
        Some(2)
    );
}

#[test]
fn enumerate_lists_canonical_forms() {
    let o = run(&["enumerate", "--n", "3"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1);
    assert!(out.starts_with("+-0 orbit=6 sym="));
    assert_eq!(stdout(&run(&["enumerate", "--n", "4"])).lines().count(), 3);
    assert_eq!(run(&["enumerate", "--n", "25"]).status.code(), Some(2));
}

#[test]
fn enumerate_is_independent_of_threads() {
    let one = stdout(&run(&["enumerate", "--n", "10"]));
    let four = stdout(&run(&["enumerate", "--n", "10", "--threads", "4"]));
    assert_eq!(one, four);
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "--from", "3", "--to", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    // the closed formula undercounts the octagon census
    let o = run(&["verify", "--from", "8", "--to", "8"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    assert_eq!(
        run(&["verify", "--from", "1", "--to", "2"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_json_is_an_array_of_checks() {
    let o = run(&["verify", "--from", "3", "--to", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 4);
    for item in items {
        assert!(item["formula"].is_string());
        assert!(item["oracle"].is_string());
        assert_eq!(item["pass"], true);
        assert_eq!(item["n"], 3);
    }
}

#[test]
fn symmetry_reports_json() {
    let o = run(&["symmetry", "+0-0"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!v["mirror_edge_axes"].as_array().unwrap().is_empty());
    assert_eq!(v["skewed_rotational_folds"], serde_json::json!([2]));
}

#[test]
fn symmetry_rejects_invalid_forms() {
    let o = run(&["symmetry", "000"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("NoPlus"));
    let o = run(&["symmetry", "+-"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("TooShort"));
}

#[test]
fn reach_key_chain() {
    let f = network_file(KEY_CHAIN);
    let o = run(&["reach", f.path().to_str().unwrap(), "B"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "B\nC\nD\nE\n");
}

#[test]
fn reach_single_vertex_and_missing_source() {
    let f = network_file(r#"{"vertices": ["v"], "edges": []}"#);
    let path = f.path().to_str().unwrap();
    assert_eq!(stdout(&run(&["reach", path, "v"])), "v\n");
    let o = run(&["reach", path, "X"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("UnknownVertex"));
}

#[test]
fn reach_rejects_bad_networks() {
    let f = network_file(r#"{"vertices": ["a", "b"], "edges": [{"u": "a", "v": "a", "t": 1}]}"#);
    assert_eq!(
        run(&["reach", f.path().to_str().unwrap(), "a"])
            .status
            .code(),
        Some(2)
    );
    let f = network_file("not json");
    assert_eq!(
        run(&["reach", f.path().to_str().unwrap(), "a"])
            .status
            .code(),
        Some(2)
    );
}
