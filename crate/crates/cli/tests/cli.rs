use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use trapredund::codes::code_from_alist;
use trapredund::trapping::{measure, table4_fixture};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trapredund")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn read(p: &Path) -> String {
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn bounds_output_is_reproducible() {
    let args = ["bounds", "--n", "24", "--k", "12", "--a", "3", "--b", "2"];
    let first = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, run(&args).stdout);
    let text = String::from_utf8(first.stdout).unwrap();
    assert!(text.starts_with('#'));
    assert!(text.lines().any(|l| l.starts_with("\"[24,12]\",3,2,std,,false,15,26,")), "{text}");
}

#[test]
fn json_envelope_names_its_inputs() {
    let v = json(&run(&["audit", "hamming7", "--a", "1..2", "--format", "json"]));
    assert_eq!(v["tool"], "trapredund");
    assert_eq!(v["command"], "audit");
    assert_eq!(v["inputs"][0]["source"], "hamming7");
    assert_eq!(v["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    let scans = v["result"]["scans"].as_array().unwrap();
    assert_eq!(scans.len(), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["bounds"]).status.code(), Some(2));
    assert_eq!(run(&["audit", "/nonexistent.alist", "--a", "1"]).status.code(), Some(4));
    // C(2640, 14) subsets is far over any budget.
    assert_eq!(run(&["audit", "margulis:11", "--a", "14"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h.alist");
    let o = out.to_str().unwrap();
    // Two rows cannot keep every pair of columns at b >= 20.
    let r = run(&["sample", "golay24", "--a", "2", "--b", "20", "--m", "20", "--max-attempts", "2", "-o", o]);
    assert_eq!(r.status.code(), Some(1), "{}", String::from_utf8_lossy(&r.stderr));
}

#[test]
fn sample_writes_a_reproducible_matrix_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<_> = (0..2).map(|i| dir.path().join(format!("h{i}.alist"))).collect();
    for p in &paths {
        let r = run(&["sample", "golay24", "--a", "3", "--b", "2", "--seed", "7", "-o", p.to_str().unwrap()]);
        assert!(r.status.success(), "{}", String::from_utf8_lossy(&r.stderr));
    }
    assert_eq!(read(&paths[0]), read(&paths[1]));
    let report: Value = serde_json::from_str(&read(&paths[0].with_extension("json"))).unwrap();
    assert_eq!(report["result"]["m"], 15);
    assert_eq!(report["result"]["rank"], 12);
    let code = code_from_alist(&read(&paths[0]), None).unwrap();
    assert_eq!(code.h.ncols(), 24);
}

#[test]
fn appending_the_top_candidate_raises_b_by_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("plus.alist");
    let v = json(&run(&[
        "break",
        "golay24",
        "--columns",
        "0,1,2",
        "--append-top",
        out.to_str().unwrap(),
        "--format",
        "json",
    ]));
    let before = v["result"]["b_before"].as_u64().unwrap();
    assert_eq!(v["result"]["b_after_append"].as_u64().unwrap(), before + 1);
    let h = code_from_alist(&read(&out), None).unwrap().h;
    assert_eq!(measure(&h, &[0, 1, 2]).unwrap().b as u64, before + 1);
}

#[test]
fn expanded_fixture_set_lists_shared_check_pairs_first() {
    let fx = table4_fixture(false);
    let v = json(&run(&["break", "table4a", "--columns", "0,1,2,3,4,5,6,7,8,9,10,11,12,13", "--format", "json"]));
    let cands = v["result"]["candidates"]["candidates"].as_array().unwrap();
    let pairs: Vec<Vec<u64>> = cands
        .iter()
        .map(|c| c["combo"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect::<Vec<_>>())
        .filter(|c| c.len() == 2)
        .take(2)
        .collect();
    let e = fx.checks["c_E"] as u64;
    let want = vec![vec![e, fx.checks["c_EO1"] as u64], vec![e, fx.checks["c_EO2"] as u64]];
    assert_eq!(pairs, want);
}

#[test]
fn expansion_prints_twelve_combinations() {
    let out = run(&["break", "table4a", "--columns", "0,1,2,3,4,5,6,7,8,9,10,11", "--expansion"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let data: Vec<&str> = text.lines().filter(|l| l.starts_with('S')).collect();
    assert_eq!(data.len(), 12);
    assert!(String::from_utf8(out.stderr).unwrap().contains("A"));
}
