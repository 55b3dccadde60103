use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn grayiso(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grayiso"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn temp_matrix(contents: &str) -> (tempfile::TempDir, String) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.mat");
    std::fs::write(&path, contents).unwrap();
    let p = path.display().to_string();
    (dir, p)
}

#[test]
fn map_single_words() {
    let out = grayiso(&["map", "phi", "0,0"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "input  w_L  image  w_H\n0,0    0    0000   0\n"
    );

    let out = grayiso(&["map", "psi", "--k", "3", "5"]);
    assert_eq!(
        stdout(&out),
        "input  w_hom  image  w_H\n5      2      1010   2\n"
    );

    let out = grayiso(&["--json", "map", "composed", "7,6,1"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["rows"][0]["image"], "3,1,2,0,1,1");
    assert_eq!(v["results"]["rows"][0]["source_weight"], 6);
    assert_eq!(v["results"]["rows"][0]["target_weight"], 6);
}

#[test]
fn map_general_exponent() {
    let out = grayiso(&["map", "composed", "--k", "4", "8"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("2,2,2,2  8"));
    assert_eq!(
        grayiso(&["map", "composed", "--k", "4", "--all"])
            .stdout
            .iter()
            .filter(|&&b| b == b'\n')
            .count(),
        17
    );
}

#[test]
fn usage_errors_exit_2_on_stderr() {
    for args in [
        vec!["map", "phi-inv", "101"],
        vec!["map", "phi", "4"],
        vec!["map", "phi", "1;2"],
        vec!["map", "gray", "1"],
        vec!["map", "composed", "--k", "2", "1"],
        vec!["map", "phi"],
        vec!["map", "phi", "1", "--all"],
        vec!["analyze", &fixture("example_z8.mat"), "--metric", "lee"],
        vec!["analyze", &fixture("example_z8.mat"), "--metric", "euclid"],
        vec!["analyze", &fixture("example_z8.mat"), "--image", "phi"],
        vec!["frobnicate"],
    ] {
        let out = grayiso(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn malformed_matrix_names_line() {
    let (_dir, path) = temp_matrix("# header follows\nmod 8 rows 2 cols 3\n1,2,7\n0,2,9\n");
    let out = grayiso(&["analyze", &path]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 4"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn capacity_and_missing_file_exit_1() {
    let out = grayiso(&["analyze", &fixture("example_z8.mat"), "--cap", "16"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("exceeds the cap"));

    let out = grayiso(&["analyze", "/nonexistent/g.mat"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn analyze_example_json() {
    let out = grayiso(&[
        "--json",
        "analyze",
        &fixture("example_z8.mat"),
        "--image",
        "composed",
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["command"], "analyze");
    let r = &v["results"];
    assert_eq!(r["code"]["size"], 32);
    assert_eq!(r["metrics"]["hamming"]["min_distance"], 1);
    assert_eq!(r["metrics"]["homogeneous"]["min_distance"], 4);
    assert_eq!(r["image"]["size"], 32);
    assert_eq!(r["image"]["length"], 6);
    assert_eq!(r["image"]["metric"], "lee");
    assert_eq!(r["image"]["min_distance"], 4);
    assert_eq!(r["image"]["all_even"], true);
    assert_eq!(r["image"]["linearity"]["verdict"], "nonlinear");
    assert_eq!(r["image"]["linearity"]["witness"]["kind"], "sum");
}

#[test]
fn analyze_trivial_matrices() {
    let (_dir, path) = temp_matrix("mod 8 rows 1 cols 1\n0\n");
    let out = grayiso(&["--json", "analyze", &path]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["code"]["size"], 1);
    assert_eq!(
        v["results"]["metrics"]["homogeneous"]["min_distance"],
        Value::Null
    );
    let text = stdout(&grayiso(&["analyze", &path]));
    assert!(text.contains("homogeneous distance: undefined"), "{text}");

    let (_dir2, path) = temp_matrix("mod 8 rows 1 cols 1\n1\n");
    let v: Value = serde_json::from_slice(&grayiso(&["--json", "analyze", &path]).stdout).unwrap();
    assert_eq!(v["results"]["code"]["size"], 8);
    assert_eq!(v["results"]["metrics"]["homogeneous"]["min_distance"], 2);
}

#[test]
fn reports_are_deterministic_and_round_trip() {
    for args in [
        vec!["--json", "map", "phi", "--all"],
        vec!["--json", "map", "composed", "--all"],
        vec!["--json", "verify"],
        vec![
            "--json",
            "analyze",
            &fixture("example_z8.mat"),
            "--image",
            "composed",
        ],
    ] {
        let first = grayiso(&args).stdout;
        let second = grayiso(&args).stdout;
        assert_eq!(first, second, "{args:?}");
        let parsed: Value = serde_json::from_slice(&first).unwrap();
        let mut again = serde_json::to_string_pretty(&parsed).unwrap();
        again.push('\n');
        assert_eq!(again.as_bytes(), first.as_slice(), "{args:?}");
    }
    assert_eq!(
        grayiso(&["map", "psi", "--all"]).stdout,
        grayiso(&["map", "psi", "--all"]).stdout
    );
}

#[test]
fn verify_passes() {
    let out = grayiso(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("rm1-image-k3"));
    assert!(text.contains("proposition-iii"));
    assert!(text.ends_with("22 of 22 checks passed\n"));
}
