use std::path::Path;
use std::process::{Command, Output};

use cubedom::cube::gray_code_path;
use cubedom::io::write_tree;

fn cubedom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubedom"))
        .args(args)
        .env_remove("CUBEDOM_NMAX")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn code_lists_codewords() {
    let o = cubedom(&["code", "--k", "2", "--list"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("N=3\n"));
    assert!(out.contains("row0=111\n"));
    assert!(out.ends_with("000\n111\n"));

    let o = cubedom(&["code", "--k", "5"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("codewords=67108864"));
    assert_eq!(code(&cubedom(&["code", "--k", "5", "--list"])), 2);
}

#[test]
fn construct_hamming_q3_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let set = dir.path().join("set.txt");
    let tree = dir.path().join("tree.txt");
    let o = cubedom(&[
        "construct", "--n", "3", "--method", "hamming", "--out-set", path(&set), "--out-tree", path(&tree),
    ]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("ds_size=2\n"));
    assert!(out.contains("cds_size=4\n"));
    assert!(out.contains("leaf_count=4\n"));
    assert_eq!(std::fs::read_to_string(&set).unwrap(), "000\n001\n011\n111\n");

    let v = cubedom(&["verify", "tree", "--n", "3", "--file", path(&tree)]);
    assert_eq!(code(&v), 0, "{}", stdout(&v));
    let v = cubedom(&["verify", "set", "--n", "3", "--file", path(&set), "--connected"]);
    assert_eq!(code(&v), 0);
}

#[test]
fn construct_expansion_instance() {
    let o = cubedom(&["construct", "--n", "4", "--method", "expansion", "--k", "2", "--j", "1", "--json"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let json = out.lines().find(|l| l.starts_with('{')).unwrap();
    let r: serde_json::Value = serde_json::from_str(json).unwrap();
    assert!(r["cds_size"].as_u64().unwrap() <= 6);
    assert!(r["leaf_count"].as_u64().unwrap() >= 10);
}

#[test]
fn construct_auto_q7_beats_star_connection_bound() {
    let o = cubedom(&["construct", "--n", "7", "--method", "auto"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("method=expansion\n"));
    assert!(out.contains("bound_value=34\n"));
    let cds: u64 = out
        .lines()
        .find_map(|l| l.strip_prefix("cds_size="))
        .unwrap()
        .parse()
        .unwrap();
    assert!(cds <= 34, "auto should not exceed the expansion bound 34 (star connection bound 46)");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&cubedom(&["construct", "--n", "4", "--method", "hamming"])), 2);
    assert_eq!(code(&cubedom(&["construct", "--n", "4", "--method", "bogus"])), 2);
    assert_eq!(code(&cubedom(&["construct"])), 2);
    assert_eq!(code(&cubedom(&["table", "--min-n", "1", "--max-n", "4"])), 2);
    assert_eq!(code(&cubedom(&["exact", "gamma", "--n", "9"])), 2);
}

#[test]
fn verify_set_connected_flag() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("two_codewords.txt");
    std::fs::write(&f, "000\n111\n").unwrap();
    let o = cubedom(&["verify", "set", "--n", "3", "--file", path(&f), "--connected"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("dominating=true\nconnected=false\n"));
    assert_eq!(code(&cubedom(&["verify", "set", "--n", "3", "--file", path(&f)])), 0);

    std::fs::write(&f, "000\n11\n").unwrap();
    let o = cubedom(&["verify", "set", "--n", "3", "--file", path(&f)]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn verify_tree_files() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("gray.txt");
    let text = write_tree(&gray_code_path(4).unwrap());
    std::fs::write(&f, &text).unwrap();
    let o = cubedom(&["verify", "tree", "--n", "4", "--file", path(&f)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("leaf_count=2\n"));

    // replace the last edge by a repeat of the first: a cycle and a split
    let mut lines: Vec<&str> = text.lines().collect();
    let first = lines[1];
    *lines.last_mut().unwrap() = first;
    std::fs::write(&f, lines.join("\n")).unwrap();
    let o = cubedom(&["verify", "tree", "--n", "4", "--file", path(&f)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("closes a cycle"));

    lines.pop();
    std::fs::write(&f, lines.join("\n")).unwrap();
    let o = cubedom(&["verify", "tree", "--n", "4", "--file", path(&f)]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("14 edges"));
}

#[test]
fn exact_reports_status() {
    let o = cubedom(&["exact", "gamma", "--n", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("value=2\nstatus=proven\n"));

    let o = cubedom(&["exact", "gamma-c", "--n", "3", "--no-symmetry"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("value=4\nstatus=proven\n"));

    let o = cubedom(&["exact", "gamma", "--n", "5", "--budget-nodes", "2"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("status=budget_exhausted"));

    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.txt");
    let o = cubedom(&["exact", "gamma", "--n", "4", "--witness", path(&w)]);
    assert_eq!(code(&o), 0);
    let v = cubedom(&["verify", "set", "--n", "4", "--file", path(&w)]);
    assert_eq!(code(&v), 0);
    assert!(stdout(&v).contains("size=4"));
}

#[test]
fn table_respects_cap() {
    let o = Command::new(env!("CARGO_BIN_EXE_cubedom"))
        .args(["table", "--min-n", "9", "--max-n", "12"])
        .env("CUBEDOM_NMAX", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);

    let o = Command::new(env!("CARGO_BIN_EXE_cubedom"))
        .args(["table", "--min-n", "9", "--max-n", "12", "--formula-above-nmax", "--format", "tsv"])
        .env("CUBEDOM_NMAX", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let modes: Vec<&str> = out.lines().skip(1).map(|l| l.rsplit('\t').next().unwrap()).collect();
    assert_eq!(modes, ["explicit", "explicit", "formula", "formula"]);
}

#[test]
fn table_sawtooth_columns() {
    let o = cubedom(&["table", "--min-n", "3", "--max-n", "7"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let header: Vec<&str> = out.lines().next().unwrap().split(',').collect();
    let col = |name: &str| header.iter().position(|h| *h == name).unwrap();
    let rows: Vec<Vec<&str>> = out.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(rows[0][col("ratio_gamma")], "1.00000");
    assert_eq!(rows[3][col("ratio_gamma_n")], "1.50000");
    assert_eq!(rows[4][col("ratio_gamma")], "1.00000");
}
