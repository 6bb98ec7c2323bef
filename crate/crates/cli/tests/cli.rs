use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn completed_cycle_three() {
    let out = run(&["completed-cycle", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let compact: String = text.split_whitespace().collect();
    assert_eq!(compact, r#"{"[3]":"1/2","[1,1]":"1/2","[1]":"1/24"}"#);
}

#[test]
fn compute_example() {
    let v = json(&[
        "compute",
        "--d",
        "2",
        "--m",
        "2",
        "--K",
        "[2]",
        "--profiles",
        "[2];[1,1]",
    ]);
    assert_eq!(v["value"], "1/2");
    assert_eq!(v["query"]["profiles"], "[2];[1,1]");
}

#[test]
fn compute_round_trips() {
    let v = json(&[
        "compute",
        "--d",
        "4",
        "--m",
        "2",
        "--K",
        "[3,2]",
        "--profiles",
        "[4];[2,2]",
        "--star",
    ]);
    let q = &v["query"];
    let d = q["d"].to_string();
    let m = q["m"].to_string();
    let mut args = vec![
        "compute",
        "--d",
        &d,
        "--m",
        &m,
        "--K",
        q["K"].as_str().unwrap(),
        "--profiles",
        q["profiles"].as_str().unwrap(),
    ];
    if q["star"] == true {
        args.push("--star");
    }
    assert_eq!(json(&args), v);
}

#[test]
fn oracle_agrees() {
    let v = json(&[
        "oracle",
        "--d",
        "3",
        "--m",
        "1",
        "--K",
        "[3]",
        "--profiles",
        "[2,1];[3]",
    ]);
    assert_eq!(v["match"], true);
    assert_eq!(v["oracle"], v["formula"]);
}

#[test]
fn table_rows() {
    let out = run(&[
        "table", "--d", "4", "--m", "4", "--K", "[2]", "--format", "csv",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "d,m,K,beta,value");
    assert_eq!(lines.len(), 6);
    let empty = run(&["table", "--d", "3", "--m", "5", "--format", "csv"]);
    assert_eq!(
        String::from_utf8(empty.stdout).unwrap(),
        "d,m,K,beta,value\n"
    );
}

#[test]
fn deterministic_across_threads() {
    let args = ["table", "--d", "5", "--K", "[3,2]", "--format", "csv"];
    let one = run(&[&["--jobs", "1"], &args[..]].concat()).stdout;
    let many = run(&[&["--jobs", "4"], &args[..]].concat()).stdout;
    assert_eq!(one, many);
    assert_eq!(run(&args).stdout, one);
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["compute", "--d", "2", "--m", "3", "--profiles", "[2]"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["compute", "--d", "3", "--m", "1", "--profiles", "[2]"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["decompose", "--beta", "[2,x]"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["compute", "--bogus"]).status.code(), Some(2));
    assert_eq!(
        run(&[
            "--oracle-cap",
            "5",
            "oracle",
            "--d",
            "6",
            "--m",
            "1",
            "--profiles",
            "[6]"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn decompose_two_two() {
    let v = json(&["decompose", "--beta", "[2,2]"]);
    assert_eq!(v["coefficients"]["3"], "4/3");
    assert_eq!(v["coefficients"]["1"], "-1/3");
    assert_eq!(v["reconstructs"], true);
}

#[test]
fn poly_checks() {
    let v = json(&["poly-check", "--mode", "double", "--K", "[3,2]", "--n", "2"]);
    assert_eq!(v["within_window"], true);
    assert_eq!(v["counterexamples"].as_array().unwrap().len(), 0);
    let v = json(&[
        "poly-check",
        "--mode",
        "lambda-g",
        "--K",
        "[3,3]",
        "--n",
        "3",
    ]);
    assert_eq!(v["g"], 1);
    assert!(v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["match"] == true));
    let v = json(&[
        "poly-check",
        "--mode",
        "string",
        "--K",
        "[3]",
        "--z",
        "2",
        "--x",
        "3",
    ]);
    assert_eq!(v["holds_corrected"], true);
    let v = json(&[
        "poly-check",
        "--mode",
        "dilaton",
        "--K",
        "[3]",
        "--z",
        "1",
        "--x",
        "3",
    ]);
    assert_eq!(v["holds_corrected"], true);
}

#[test]
fn verify_suites() {
    let v = json(&["verify", "--suite", "1"]);
    assert_eq!(v["criteria"][0]["passed"], true);
    let v = json(&["verify", "--suite", "6", "--dmax", "6"]);
    assert_eq!(v["failing"].as_array().unwrap().len(), 0);
    assert_eq!(run(&["verify", "--suite", "42"]).status.code(), Some(2));
}
