use std::process::{Command, Output};

use serde_json::Value;
use turan_vdc::extremal::build_extremal;
use turan_vdc::lp::delta_grid_lp;
use turan_vdc::{make_cutoff, CosPoly, SupportSet};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_turan-vdc"))
        .args(args)
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stderr_of(args: &[&str], code: i32) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(code));
    assert!(out.stdout.is_empty());
    String::from_utf8(out.stderr).unwrap()
}

#[test]
fn turan_value_round_trips_exactly() {
    let v = json(&["turan", "--p", "1", "--q", "7"]);
    assert_eq!(v["A"].as_f64(), Some(1.0 / 7.0));
    let v = json(&["turan", "--p", "3", "--q", "10"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["p", "q", "A", "gamma"]);
    let (a, via_gamma) = (v["A"].as_f64().unwrap(), v["gamma"]["A"].as_f64().unwrap());
    assert!((a - via_gamma).abs() <= 1e-12);
}

#[test]
fn invalid_input_exits_with_two() {
    assert!(stderr_of(&["turan", "--p", "2", "--q", "4"], 2).starts_with("error:"));
    assert!(stderr_of(&["turan", "--p", "3", "--q", "5"], 2).starts_with("error:"));
    assert!(stderr_of(&["delta", "--set", "2,3", "--grid", "4"], 2).contains("too coarse"));
    assert!(stderr_of(&["delta", "--set", "2,x"], 2).starts_with("error"));
    stderr_of(
        &[
            "check",
            "--property",
            "mono",
            "--k1",
            "1,2,3",
            "--k2",
            "2,3",
        ],
        2,
    );
    stderr_of(&["frobnicate"], 2);
}

#[test]
fn delta_matches_library() {
    let v = json(&["delta", "--set", "2,3", "--grid", "512", "--certify"]);
    let lib = delta_grid_lp(&SupportSet::finite([2, 3]).unwrap(), 512).unwrap();
    assert_eq!(v["value"].as_f64(), Some(lib.value));
    assert_eq!(v["status"], "Optimal");
    let cert = &v["certificate"];
    assert!(cert["certified_min"].as_f64().unwrap() <= cert["grid_min"].as_f64().unwrap());
}

#[test]
fn extremal_file_deserializes_to_the_same_polynomial() {
    let path = std::env::temp_dir().join(format!("turan-vdc-cli-{}.json", std::process::id()));
    let report = json(&[
        "extremal",
        "--p",
        "3",
        "--q",
        "11",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(report["member"], true);
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let poly: CosPoly = serde_json::from_str(&text).unwrap();
    assert_eq!(poly, build_extremal(make_cutoff(3, 11).unwrap()).unwrap());
}

#[test]
fn table_csv_and_text() {
    let out = run(&["table", "--p", "2", "--qmin", "5", "--qmax", "9"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "q,A,gamma0");
    // Odd q only: 5, 7, 9.
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("5,"));

    let out = run(&["turan", "--p", "1", "--q", "4", "--format", "text"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "p: 1\nq: 4\nA: 0.25\n"
    );
}

#[test]
fn checks_report_pass() {
    for args in [
        &[
            "check",
            "--property",
            "dilate",
            "--set",
            "2,3",
            "--factor",
            "3",
            "--grid",
            "512",
        ][..],
        &[
            "check",
            "--property",
            "divis",
            "--set",
            "1,2,4,5",
            "--factor",
            "3",
            "--grid",
            "512",
        ],
        &[
            "check",
            "--property",
            "super",
            "--k1",
            "1",
            "--k2",
            "2",
            "--grid",
            "512",
        ],
        &["check", "--property", "pairing", "--p", "2", "--q", "7"],
    ] {
        let v = json(args);
        assert_eq!(v["pass"], true, "{args:?}: {v}");
    }
    let v = json(&[
        "check",
        "--property",
        "vdc",
        "--set",
        "2,3",
        "--grid",
        "512",
    ]);
    assert!(v["verdict"]
        .as_str()
        .unwrap()
        .starts_with("NotVanDerCorput("));
}
