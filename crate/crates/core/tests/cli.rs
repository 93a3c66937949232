//! End-to-end runs of the `regcomp` binary.

use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn spec(dir: &TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regcomp"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const EWENS: &str = r#"{"family": {"kind": "two_param", "alpha": 0, "theta": 1}, "n_max": 4}"#;
const HALF: &str = r#"{"family": {"kind": "two_param", "alpha": "1/2", "theta": "1/2"}, "n_max": 8}"#;

#[test]
fn table_commands() {
    let dir = TempDir::new().unwrap();
    let ewens = spec(&dir, "ewens.json", EWENS);
    let o = run(&["decrement", "--spec", &ewens]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "n,1,2,3,4\n1,1,,,\n2,1/2,1/2,,\n3,1/3,1/3,1/3,\n4,1/4,1/4,1/4,1/4\n"
    );

    let drift = spec(
        &dir,
        "drift.json",
        r#"{"family": {"kind": "discrete", "drift": 1}, "n_max": 3, "normalization": "raw"}"#,
    );
    let o = run(&["phi", "--spec", &drift]);
    let col: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(col, ["1", "2", "3"]);

    let half = spec(&dir, "half.json", HALF);
    let o = run(&["law", "--spec", &half, "--n", "2"]);
    assert_eq!(stdout(&o), "composition,probability\n2,1/3\n1-1,2/3\n");

    let out = dir.path().join("green.csv");
    let o = run(&["green", "--spec", &ewens, "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let green = std::fs::read_to_string(&out).unwrap();
    assert!(
        green.lines().nth(3).unwrap().starts_with("3,1/2,1/3,1"),
        "{green}"
    );

    let o = run(&["decrement", "--spec", &ewens, "--backend", "float"]);
    assert!(stdout(&o).contains("0.3333333333333333"));
}

#[test]
fn exact_output_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let half = spec(&dir, "half.json", HALF);
    let a = run(&["law", "--spec", &half, "--n", "6"]);
    let b = run(&["law", "--spec", &half, "--n", "6"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_reports() {
    let dir = TempDir::new().unwrap();
    let half = spec(&dir, "half.json", HALF);
    let o = run(&["verify", "--spec", &half]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("symmetry: SymmetricAlphaAlpha{1/2}"));
    assert!(!stdout(&o).contains("FAIL"));

    let ewens = spec(&dir, "ewens.json", EWENS);
    let o = run(&["verify", "--spec", &ewens]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("symmetry: Asymmetric{3}"));

    let bad = spec(
        &dir,
        "bad.json",
        r#"{"matrix": [["1"], ["1/2", "1/2"], ["2/5", "1/3", "1/3"], ["1/4", "1/4", "1/4", "1/4"]]}"#,
    );
    let o = run(&["verify", "--spec", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stdout(&o).contains("FAIL decrement recursion: fails at (n,m) = (2,1)"),
        "{}",
        stdout(&o)
    );

    let float = spec(
        &dir,
        "float.json",
        r#"{"family": {"kind": "ewens", "theta": 1}, "n_max": 4, "backend": "float"}"#,
    );
    assert_eq!(run(&["verify", "--spec", &float]).status.code(), Some(2));
}

#[test]
fn errors_are_located() {
    let dir = TempDir::new().unwrap();
    let broken = spec(
        &dir,
        "broken.json",
        "{\"family\": {\"kind\": \"ewens\",\n \"theta\": \"one\"}, \"n_max\": 3}",
    );
    let o = run(&["phi", "--spec", &broken]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");

    let half = spec(&dir, "half.json", HALF);
    let o = run(&["law", "--spec", &half, "--n", "17"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("16"));

    let o = run(&["phi", "--spec", Path::new("/nonexistent.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sampling_writes_samples_and_summary() {
    let dir = TempDir::new().unwrap();
    let ewens = spec(&dir, "ewens.json", EWENS);
    let samples = dir.path().join("s.txt");
    let summary = dir.path().join("s.json");
    let o = run(&[
        "sample",
        "--spec",
        &ewens,
        "--n",
        "3",
        "--count",
        "20000",
        "--seed",
        "9",
        "--threads",
        "3",
        "--out",
        samples.to_str().unwrap(),
        "--summary",
        summary.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let lines = std::fs::read_to_string(&samples).unwrap();
    assert_eq!(lines.lines().count(), 20000);
    assert!(lines.lines().all(|l| ["3", "2-1", "1-2", "1-1-1"].contains(&l)));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&summary).unwrap()).unwrap();
    assert_eq!(json["seed"], 9);
    assert_eq!(json["sample_size"], 20000);
    assert!(json["p_value"].as_f64().unwrap() > 1e-3);
    for key in ["tv", "chi_square"] {
        assert!(json[key].is_number());
    }

    let again = run(&[
        "sample", "--spec", &ewens, "--n", "3", "--count", "20000", "--seed", "9",
    ]);
    assert_eq!(again.stdout, lines.as_bytes());

    for method in ["growth", "stick"] {
        let o = run(&[
            "sample", "--spec", &ewens, "--n", "3", "--count", "10", "--method", method,
        ]);
        assert_eq!(o.status.success(), method == "growth", "{method}");
    }
    let geo = spec(
        &dir,
        "geo.json",
        r#"{"family": {"kind": "geometric", "x": "1/2"}, "n_max": 4}"#,
    );
    let o = run(&[
        "sample", "--spec", &geo, "--n", "4", "--count", "10", "--method", "stick",
    ]);
    assert!(o.status.success());

    let o = run(&[
        "sample",
        "--spec",
        &ewens,
        "--n",
        "3",
        "--count",
        "11",
        "--sample-cap",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn grow_and_symmetry() {
    let dir = TempDir::new().unwrap();
    let half = spec(&dir, "half.json", HALF);
    let o = run(&["grow", "--spec", &half, "--from", "1"]);
    assert_eq!(stdout(&o), "composition,probability\n1-1,2/3\n2,1/3\n");
    let o = run(&["detect-symmetry", "--spec", &half]);
    assert_eq!(stdout(&o), "SymmetricAlphaAlpha{1/2}\n");
    let o = run(&["law", "--spec", &half, "--n", "3", "--enum-cap", "20"]);
    assert!(String::from_utf8(o.stderr).unwrap().contains("warning"));
}
