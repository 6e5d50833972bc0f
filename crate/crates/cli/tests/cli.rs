use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const FLAGSHIP: &str = "1111100000\n1100011100\n0011011010\n1000110011\n0010101101\n0101000111\n";

fn ferrers(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ferrers"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn tdelta_text() {
    let out = ferrers(&["tdelta", "--diagram", "6,3,2,2", "--delta", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 (i=1)");
    let out = ferrers(&["tdelta", "--diagram", "6,3,2,2", "--delta", "2"]);
    assert_eq!(stdout(&out).trim(), "7 (i=1)");
}

#[test]
fn tdelta_profile() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("identity.json");
    fs::write(&p, r#"{"k":3,"m":3,"cells":[[1,1],[2,2],[3,3]]}"#).unwrap();
    let out = ferrers(&["tdelta", "--profile", path(&p), "--delta", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("2 "));
    let out = ferrers(&["tdelta", "--profile", path(&p), "--delta", "2", "--json"]);
    assert_eq!(json(&out)["value"], 2);
}

#[test]
fn construct_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (diagram, delta, q) in [
        ("6,3,2,2", "2", "2"),
        ("4,3,2,1", "3", "3"),
        ("3,3,2,2,1@5", "3", "2"),
        ("5,5,4", "2", "4"),
    ] {
        let f = dir.path().join("space.json");
        let out = ferrers(&[
            "construct",
            "--diagram",
            diagram,
            "--delta",
            delta,
            "--q",
            q,
            "--out",
            path(&f),
        ]);
        assert!(out.status.success(), "{diagram}");
        let out = ferrers(&["verify", "--space", path(&f), "--delta", delta]);
        assert!(out.status.success(), "{diagram}: {}", stdout(&out));
        assert_eq!(json(&out)["ok"], true);
    }
}

#[test]
fn construct_examples() {
    let out = ferrers(&["construct", "--diagram", "6,3,2,2", "--delta", "2", "--q", "2"]);
    let v = json(&out);
    assert_eq!(
        (v["dimension"].as_u64(), v["attains_bound"].as_bool()),
        (Some(7), Some(true))
    );
    let out = ferrers(&[
        "construct",
        "--diagram",
        "4,3,2,1",
        "--delta",
        "3",
        "--q",
        "3",
        "--method",
        "diagonal",
    ]);
    assert_eq!(json(&out)["dimension"], 3);
    let out = ferrers(&[
        "construct",
        "--diagram",
        "4,4,2,2",
        "--delta",
        "4",
        "--q",
        "5",
        "--method",
        "square",
    ]);
    assert_eq!(json(&out)["dimension"], 2);
}

#[test]
fn construct_is_deterministic_across_jobs() {
    let a = ferrers(&[
        "--jobs",
        "1",
        "construct",
        "--diagram",
        "5,4,4,2",
        "--delta",
        "3",
        "--q",
        "3",
    ]);
    let b = ferrers(&["construct", "--diagram", "5,4,4,2", "--delta", "3", "--q", "3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_reports_witness() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.json");
    fs::write(
        &f,
        r#"{"field":{"p":2,"e":1,"modulus":[0,1]},"k":3,"m":3,"basis":[[[1,0,0],[0,1,0],[0,0,0]]]}"#,
    )
    .unwrap();
    let out = ferrers(&["verify", "--space", path(&f), "--delta", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!((v["ok"].as_bool(), v["witness_rank"].as_u64()), (Some(false), Some(2)));
    let out = ferrers(&["verify", "--space", path(&f), "--delta", "2", "--anticode"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn multilevel_flagship() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("pivots.txt");
    fs::write(&p, FLAGSHIP).unwrap();
    let out = ferrers(&[
        "multilevel",
        "--n",
        "10",
        "--k",
        "5",
        "--delta",
        "3",
        "--q",
        "2",
        "--pivots",
        path(&p),
        "--bounds",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["cardinality"], "32843");
    assert!(v["min_distance_certificate"].as_u64().unwrap() >= 3);
    let dims: Vec<u64> = v["levels"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l["dim"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, [15, 6, 2, 2, 1, 0]);
    assert_eq!(v["bounds"]["lower"], "32839");
}

#[test]
fn multilevel_emit_and_cap() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("pivots.txt");
    fs::write(&p, "1100000\n0011000\n0000110\n").unwrap();
    let e = dir.path().join("words.json");
    let out = ferrers(&[
        "multilevel",
        "--n",
        "7",
        "--k",
        "2",
        "--delta",
        "2",
        "--pivots",
        path(&p),
        "--emit",
        path(&e),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let words: Value = serde_json::from_str(&fs::read_to_string(&e).unwrap()).unwrap();
    let total: u64 = json(&out)["cardinality"].as_str().unwrap().parse().unwrap();
    assert_eq!(words["codewords"].as_array().unwrap().len() as u64, total);
    let out = ferrers(&[
        "multilevel",
        "--n",
        "7",
        "--k",
        "2",
        "--delta",
        "2",
        "--pivots",
        path(&p),
        "--emit",
        path(&e),
        "--cap",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn multilevel_rejects_close_pivots() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("pivots.txt");
    fs::write(&p, "1100\n1010\n").unwrap();
    let out = ferrers(&[
        "multilevel",
        "--n",
        "4",
        "--k",
        "2",
        "--delta",
        "2",
        "--pivots",
        path(&p),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_rows() {
    let out = ferrers(&["table", "--q", "2"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[0].starts_with("(10,5,3)") && lines[0].ends_with("= 32843"));
    let out = ferrers(&["table", "--q", "3", "--json"]);
    assert_eq!(json(&out)[4]["value"], (3u64.pow(18) + 243 + 1).to_string());
}

#[test]
fn lexicode_output() {
    let out = ferrers(&["lexicode", "--n", "10", "--k", "5", "--d", "6"]);
    let text = stdout(&out);
    let words: Vec<&str> = text.lines().collect();
    assert_eq!(words[..3], ["1111100000", "1100011100", "1010010011"]);
}

#[test]
fn search_and_anticode() {
    let out = ferrers(&["search", "--diagram", "3,2,1", "--delta", "3"]);
    let v = json(&out);
    assert_eq!((v["maxdim"].as_u64(), v["certified"].as_bool()), (Some(1), Some(true)));
    let out = ferrers(&["anticode", "--diagram", "3,2,1", "--delta", "2"]);
    let v = json(&out);
    assert_eq!(v["dimension"], 3);
    let out = ferrers(&["search", "--diagram", "3,2,1", "--delta", "2", "--anticode"]);
    assert_eq!(json(&out)["maxdim"], 3);
}

#[test]
fn usage_errors() {
    assert_eq!(ferrers(&["tdelta", "--diagram", "6,3,2,2"]).status.code(), Some(2));
    assert_eq!(
        ferrers(&["tdelta", "--diagram", "2,3", "--delta", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        ferrers(&["construct", "--diagram", "3,3", "--delta", "2", "--q", "6"])
            .status
            .code(),
        Some(2)
    );
}
