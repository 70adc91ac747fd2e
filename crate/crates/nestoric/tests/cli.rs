//! End-to-end tests of the command-line interface: golden output bytes for
//! the stable text formats, JSON schema checks, file parsing round-trips,
//! and the exit-code contract.

use std::path::Path;
use std::process::Command;

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_nestoric"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        code: out.status.code().expect("exit code"),
    }
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn betti_path_six_tsv_golden() {
    let r = run(&["betti", "--path", "6"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "k\tbeta\n0\t1\n1\t5\n2\t9\n3\t5\n");
}

#[test]
fn betti_json_schema() {
    let r = run(&["betti", "--path", "6", "--format", "json", "--unimodality"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["source"], "path 6");
    assert_eq!(v["method"], "alternating");
    assert_eq!(v["betti"], serde_json::json!([1, 5, 9, 5]));
    assert_eq!(v["unimodality"]["unimodal"], true);
    assert_eq!(v["unimodality"]["log_concave"], true);
}

#[test]
fn betti_both_json_schema() {
    let r = run(&["betti", "--hochschild", "2", "4", "--method", "both", "--format", "json"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["source"], "hochschild 2 4");
    assert_eq!(v["method"], "both");
    assert_eq!(v["alternating"], serde_json::json!([1, 4, 5, 2]));
    assert_eq!(v["homology"], serde_json::json!([1, 4, 5, 2]));
    assert_eq!(v["chordal"], true);
    assert_eq!(v["agree"], true);
}

#[test]
fn betti_breakdown_rows() {
    let r = run(&["betti", "--path", "6", "--breakdown"]);
    assert_eq!(r.code, 0);
    let (totals, rows) = r.stdout.split_once("\n\n").expect("blank separator");
    assert_eq!(totals, "k\tbeta\n0\t1\n1\t5\n2\t9\n3\t5");
    assert!(rows.starts_with("subset\tk\tcount\n"));
    assert!(rows.contains("{}\t0\t1\n"));
    assert!(rows.contains("{1,2,3,4}\t2\t2\n"));
    assert!(rows.contains("{1,2,3,4,5,6}\t3\t5\n"));
    // Only nonzero contributions are listed: 13 rows for the six-path.
    assert_eq!(rows.trim_end().lines().count(), 14);
}

#[test]
fn verify_el_golden() {
    let r = run(&["verify-el", "--hochschild", "2", "4"]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "elements\t10\ncovers\t17\nintervals\t26\nmaximal_chains\t9\n\
         histogram\t2 6 1\ndecreasing_chain\t{} {5,6} {3,4,5,6} {1,2,3,4,5,6}\n"
    );
}

#[test]
fn hochschild_table_golden() {
    let r = run(&["hochschild-table", "--max-m", "2"]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.stdout,
        "m\tn\tbetti\n\
         0\t>=2\t1 1\n\
         1\t2\t1 2\n\
         1\t>=3\t1 2 1\n\
         2\t2\t1 4 3\n\
         2\t3\t1 4 5\n\
         2\t>=4\t1 4 5 2\n"
    );
}

#[test]
fn hochschild_table_json() {
    let r = run(&["hochschild-table", "--max-m", "1", "--format", "json"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["max_m"], 1);
    assert_eq!(v["rows"][0]["m"], 0);
    assert_eq!(v["rows"][0]["betti"], serde_json::json!([1, 1]));
    assert_eq!(v["rows"][2]["n"], ">=3");
    assert_eq!(v["rows"][2]["betti"], serde_json::json!([1, 2, 1]));
}

#[test]
fn complex_betti_path_four() {
    let r = run(&["complex-betti", "--path", "4"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "k\tbeta\n0\t1\n1\t0\n2\t6\n3\t0\n4\t6\n5\t0\n6\t1\n");
}

#[test]
fn building_set_file_matches_graph_route() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "p4.bs",
        "# the four-path building set\n\
         ground: 1 2 3 4\n\
         1\n2\n3\n4\n\
         1 2\n2 3\n3 4\n\
         1 2 3\n2 3 4\n\
         1 2 3 4\n",
    );
    let from_file = run(&["betti", "--building-set", &file]);
    let from_graph = run(&["betti", "--path", "4"]);
    assert_eq!(from_file.code, 0);
    assert_eq!(from_file.stdout, from_graph.stdout);
    assert_eq!(from_file.stdout, "k\tbeta\n0\t1\n1\t3\n2\t2\n");
}

#[test]
fn add_singletons_fills_missing_members() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "sparse.bs", "ground: 1 2 3 4\n1 2\n2 3\n3 4\n1 2 3\n2 3 4\n1 2 3 4\n");
    let bare = run(&["betti", "--building-set", &file]);
    assert_eq!(bare.code, 2, "missing singletons must be rejected");
    let filled = run(&["betti", "--building-set", &file, "--add-singletons"]);
    assert_eq!(filled.code, 0);
    assert_eq!(filled.stdout, "k\tbeta\n0\t1\n1\t3\n2\t2\n");
}

#[test]
fn graph_file_matches_builtin_path() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "p6.graph",
        "# six-path\nvertices: 1 2 3 4 5 6\n1 2\n2 3\n3 4\n4 5\n5 6\n",
    );
    let r = run(&["betti", "--graph", &file]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "k\tbeta\n0\t1\n1\t5\n2\t9\n3\t5\n");
}

#[test]
fn compare_reports_disagreement_cells() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "r5.graph",
        "# five-cycle, relabeled\n1 5\n5 4\n4 2\n2 3\n3 1\n",
    );
    let r = run(&["compare", "--graph", &file]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("k\talt\thomology\n0\t1\t1\n1\t5\t5\n2\t12\t10\n"));
    assert!(r.stdout.contains("{1,2,3,4}\t2\t3\t2\n"));
    assert!(r.stdout.contains("{1,2,3,5}\t2\t3\t2\n"));
    assert!(r.stdout.contains("# chordal: false\n"));
    assert!(r.stdout.contains("# agree: false\n"));
}

#[test]
fn anumber_of_trees_on_four_vertices() {
    let dir = tempfile::tempdir().unwrap();
    let path4 = write(dir.path(), "p4.graph", "1 2\n2 3\n3 4\n");
    let r = run(&["anumber", "--graph", &path4]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "a\t2\nsa\t2\n");
    // Odd vertex count forces a zero a-number.
    let c5 = write(dir.path(), "c5.graph", "1 2\n2 3\n3 4\n4 5\n5 1\n");
    let r = run(&["anumber", "--graph", &c5]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "a\t0\nsa\t0\n");
}

#[test]
fn exit_code_two_for_input_problems() {
    let r = run(&["betti", "--building-set", "/nonexistent/file"]);
    assert_eq!(r.code, 2);
    let v: serde_json::Value = serde_json::from_str(&r.stderr).unwrap();
    assert_eq!(v["kind"], "io");

    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.bs", "ground: 1 2\nfnord\n");
    let r = run(&["betti", "--building-set", &bad]);
    assert_eq!(r.code, 2);
    let v: serde_json::Value = serde_json::from_str(&r.stderr).unwrap();
    assert_eq!(v["kind"], "parse");

    // Conflicting sources are a usage error.
    let r = run(&["betti", "--path", "6", "--star", "4"]);
    assert_eq!(r.code, 2);
}

#[test]
fn exit_code_three_for_failed_preconditions() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.graph", "1 2\n2 3\n3 4\n4 5\n5 1\n");
    let r = run(&["betti", "--graph", &c5, "--method", "alt"]);
    assert_eq!(r.code, 3);
    let v: serde_json::Value = serde_json::from_str(&r.stderr).unwrap();
    assert_eq!(v["kind"], "precondition");
    // The homology oracle places no chordality precondition.
    let r = run(&["betti", "--graph", &c5, "--method", "homology"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "k\tbeta\n0\t1\n1\t5\n2\t10\n");
}

#[test]
fn exit_code_four_for_resource_bounds() {
    let r = run(&["betti", "--hochschild", "40", "40"]);
    assert_eq!(r.code, 4);
    let v: serde_json::Value = serde_json::from_str(&r.stderr).unwrap();
    assert_eq!(v["kind"], "bound");
}
