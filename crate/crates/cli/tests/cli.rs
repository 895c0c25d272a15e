use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn trilcd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trilcd"))
        .args(args)
        .output()
        .expect("run trilcd")
}

fn trilcd_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_trilcd"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn trilcd");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

fn params(v: &Value) -> (u64, u64, u64, bool) {
    (
        v["n"].as_u64().unwrap(),
        v["k"].as_u64().unwrap(),
        v["d"].as_u64().unwrap(),
        v["is_lcd"].as_bool().unwrap(),
    )
}

#[test]
fn construct_families() {
    let v = json(&trilcd(&[
        "construct",
        "--family",
        "simplex",
        "--k",
        "3",
        "--json",
    ]));
    assert_eq!(params(&v), (13, 3, 9, false));
    assert_eq!(v["generator"].as_array().unwrap().len(), 3);
    let v = json(&trilcd(&[
        "construct",
        "--family",
        "dim2",
        "--n",
        "14",
        "--json",
    ]));
    assert_eq!(params(&v), (14, 2, 10, true));
    let v = json(&trilcd(&[
        "construct",
        "--family",
        "paper:C_16_5_8",
        "--json",
    ]));
    assert_eq!(params(&v), (16, 5, 8, true));
}

#[test]
fn code_goes_to_stdout_and_report_to_stderr() {
    let o = trilcd(&["construct", "--family", "dim1", "--n", "6"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "ternary-code v1\nn=6 k=1\n011111\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("[6,1,5] lcd=true"));
}

#[test]
fn pipeline_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c.code");
    let file = file.to_str().unwrap();
    let o = trilcd(&["construct", "--family", "paper:C_20_11_6", "-o", file]);
    assert!(o.status.success());
    let text = fs::read_to_string(file).unwrap();
    let v = json(&trilcd_stdin(
        &["transform", "shorten", "-", "--coords", "3", "--json"],
        &text,
    ));
    assert_eq!(params(&v["after"]), (19, 10, 6, true));
    let rows: Vec<&str> = v["generator"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_str().unwrap())
        .collect();
    let code = format!("ternary-code v1\nn=19 k=10\n{}\n", rows.join("\n"));
    let v = json(&trilcd_stdin(
        &["analyze", "-", "--json", "--enumerator"],
        &code,
    ));
    assert_eq!(params(&v), (19, 10, 6, true));
    assert_eq!(v["hull_dim"], 0);
    let total: u64 = v["enumerator"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t[1].as_u64().unwrap())
        .sum();
    assert_eq!(total, 3u64.pow(10));
}

#[test]
fn transforms_by_id() {
    let v = json(&trilcd(&[
        "transform",
        "puncture",
        "C_21_4_12",
        "--coords",
        "1,2,7",
        "--json",
    ]));
    assert_eq!(params(&v["after"]), (18, 4, 10, true));
    let v = json(&trilcd(&[
        "transform",
        "juxtapose",
        "C_13_3_8",
        "--block",
        "simplex:3",
        "--json",
    ]));
    assert_eq!(params(&v["after"]), (26, 3, 17, true));
    let v = json(&trilcd(&[
        "transform",
        "scale",
        "C_13_3_8",
        "--coords",
        "1,5",
        "--json",
    ]));
    assert_eq!(params(&v["before"]), params(&v["after"]));
}

#[test]
fn search_is_reproducible() {
    let args = ["search", "--n", "8", "--k", "3", "--d", "4", "--json"];
    let a = json(&trilcd(&args));
    assert_eq!(params(&a), (8, 3, 4, true));
    assert_eq!(a["generator"], json(&trilcd(&args))["generator"]);
    let v = json(&trilcd(&[
        "search",
        "--n",
        "7",
        "--k",
        "3",
        "--exhaustive",
        "--json",
    ]));
    assert_eq!(v["exhaustive"], true);
    assert_eq!(v["d"], 4);
}

#[test]
fn unreachable_search_target_exits_one() {
    let o = trilcd(&[
        "search", "--n", "7", "--k", "2", "--d", "5", "--iters", "2000",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    assert_eq!(
        trilcd(&["construct", "--family", "bogus", "--n", "5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        trilcd(&["construct", "--family", "dim2"]).status.code(),
        Some(2)
    );
    let o = trilcd_stdin(&["analyze", "-"], "ternary-code v1\nn=3 k=1\n1x1\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let o = trilcd(&["transform", "puncture", "C_13_3_8", "--coords", "14"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn table_and_diff() {
    let v = json(&trilcd(&["table", "--max-n", "10", "--json"]));
    assert_eq!(
        v.as_array().unwrap().len(),
        (2..=10).map(|n| n - 1).sum::<usize>()
    );
    let v = json(&trilcd(&["table", "--diff", "--json"]));
    let cells = v.as_array().unwrap();
    assert!(cells.iter().all(|c| c["status"] != "MISS"));
    assert!(cells
        .iter()
        .any(|c| c["status"] == "TYPO-FLAG" && c["n"] == 12 && c["k"] == 5));
}

#[test]
fn registry_export_import() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    assert!(trilcd(&["registry", "export", path]).status.success());
    let listed = json(&trilcd(&["registry", "list", "--json"]));
    let imported = json(&trilcd(&["registry", "import", path, "--json"]));
    let ids = |v: &Value| {
        let mut ids: Vec<String> = v
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["id"].as_str().unwrap().to_string())
            .collect();
        ids.sort();
        ids
    };
    assert_eq!(ids(&listed), ids(&imported));
    fs::write(
        dir.path().join("C_13_4_7.code"),
        "ternary-code v1\nn=13 k=4\n",
    )
    .unwrap();
    assert_ne!(trilcd(&["registry", "import", path]).status.code(), Some(0));
}

#[test]
fn verify_suite() {
    let v = json(&trilcd(&["verify", "--json"]));
    assert_eq!(v["passed"], true);
    assert_eq!(v["failed"], 0);
    assert!(v["total"].as_u64().unwrap() > 300);

    let dir = tempfile::tempdir().unwrap();
    fs::write(
        dir.path().join("B_5_2.code"),
        "ternary-code v1\nn=2 k=5\n00\n00\n00\n00\n00\n",
    )
    .unwrap();
    let o = trilcd(&["verify", "--named-dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("hash mismatch for B_5_2"));
}
