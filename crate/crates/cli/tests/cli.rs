use std::path::PathBuf;
use std::process::{Command, Output};

use nilmat::Polynomial;
use tempfile::TempDir;

fn nilmat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilmat"))
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

fn matrix_file(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

const ROTATION: &str = r#"{"ring":"Q","rows":2,"cols":2,"entries":[["1","-1"],["1","1"]]}"#;

#[test]
fn dim_of_the_two_by_two_algebra() {
    let o = nilmat(&["dim", "--grid", "2x2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "6\n");
}

#[test]
fn dim_with_basis_lists_labels_and_degrees() {
    let o = nilmat(&["dim", "--grid", "2x2", "--with-basis"]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "6");
    assert_eq!(lines.len(), 7);
    assert!(lines.contains(&"1\t0"));
    assert!(lines.contains(&"det{1,2|1,2}\t2"));
}

#[test]
fn dim_table_is_tsv() {
    let o = nilmat(&["dim", "--grid", "3x3", "--table"]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 9);
    assert!(out.lines().any(|l| l == "2\t2\t6"));
    assert!(out.lines().any(|l| l == "3\t3\t20"));
}

#[test]
fn basis_json_matches_dimension() {
    let o = nilmat(&["basis", "--grid", "2x3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 10);
}

#[test]
fn nf_swaps_the_off_diagonal_product() {
    let o = nilmat(&["nf", "--grid", "2x2", "--expr", "X12*X21"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "-X11*X22\n");
}

#[test]
fn nf_output_round_trips_through_the_parser() {
    for expr in ["X12*X21 + 3*X11", "X13*X22*X31 - 1/2*X12*X21", "X11^2 + X12*X11 + 2*X21*X12", "0"] {
        let o = nilmat(&["nf", "--grid", "3x3", "--expr", expr]);
        let printed = stdout(&o);
        let parsed = Polynomial::parse(printed.trim()).unwrap();
        assert_eq!(parsed.to_string(), printed.trim());
        // the normal form is a fixed point
        let again = nilmat(&["nf", "--grid", "3x3", "--expr", printed.trim()]);
        assert_eq!(stdout(&again), printed);
    }
}

#[test]
fn det_of_the_special_rotation() {
    let dir = TempDir::new().unwrap();
    let f = matrix_file(&dir, "special_2x2.json", ROTATION);
    let o = nilmat(&["det", "--in", f.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "det: 2\n2!*tr_m: 2\nequal: true\n");

    let o = nilmat(&["det", "--in", f.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["det"], "2");
    assert_eq!(v["equal"], true);
}

#[test]
fn check_predicates() {
    let dir = TempDir::new().unwrap();
    let rot = matrix_file(&dir, "rot.json", ROTATION);
    let rot = rot.to_str().unwrap();
    assert_eq!(stdout(&nilmat(&["check", "--pred", "special", "--in", rot])), "true\n");
    assert_eq!(stdout(&nilmat(&["check", "--pred", "dtilde", "--in", rot])), "false\n");

    let v = matrix_file(&dir, "v.json", r#"{"ring":"nil:Q:1","rows":1,"cols":2,"entries":[["e1","3*e1"]]}"#);
    assert_eq!(stdout(&nilmat(&["check", "--pred", "d", "--in", v.to_str().unwrap()])), "true\n");

    // e1, e2 in separate groups: e1*e2 survives, so the rows are not neighbours
    let s = matrix_file(&dir, "s.json", r#"{"ring":"nil:nil:Q:1:1","rows":2,"cols":1,"entries":[["e1"],["e2"]]}"#);
    assert_eq!(stdout(&nilmat(&["check", "--pred", "simplex", "--in", s.to_str().unwrap()])), "false\n");
    let s = matrix_file(&dir, "s1.json", r#"{"ring":"nil:Q:1","rows":2,"cols":1,"entries":[["e1"],["2*e1"]]}"#);
    assert_eq!(stdout(&nilmat(&["check", "--pred", "simplex", "--in", s.to_str().unwrap()])), "true\n");
}

#[test]
fn usage_errors_exit_two_and_name_the_flag() {
    let o = nilmat(&["nf", "--grid", "2by2", "--expr", "X11"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--grid"));

    let o = nilmat(&["nf", "--grid", "2x2", "--expr", "X11 +* 2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--expr"));

    let o = nilmat(&["check", "--pred", "d", "--in", "/nonexistent/m.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--in"));

    let dir = TempDir::new().unwrap();
    let bad = matrix_file(&dir, "bad.json", r#"{"ring":"Zmod:8","rows":1,"cols":1,"entries":[["1"]]}"#);
    let o = nilmat(&["det", "--in", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--in"));

    let o = nilmat(&["verify", "--prop", "P42"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--prop"));

    let o = nilmat(&["dim", "--grid", "2x2", "--frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_streams_reports_deterministically() {
    let args = ["verify", "--prop", "P2", "--mode", "both", "--cases", "30", "--seed", "7"];
    let a = nilmat(&args);
    let b = nilmat(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let lines: Vec<serde_json::Value> = stdout(&a).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert!(lines.iter().all(|r| r["status"] == "pass" && r["id"] == "P2-LinComb"));
}

#[test]
fn verify_mutated_family_exits_one() {
    let o = nilmat(&["verify", "--prop", "C1", "--mode", "randomized", "--cases", "20", "--mutate"]);
    assert_eq!(o.status.code(), Some(1));
    let r: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(r["status"], "fail");
    assert!(r["counterexample"].is_object());
}
