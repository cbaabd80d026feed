use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cursed-knight")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn solve_symmetric_threshold() {
    let out = run(&["solve", "--family", "contamination", "--param", "0.75", "--concept", "symmetric-ckne"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let t = v["profiles"][1][0].as_f64().unwrap();
    assert!((t - (7f64.sqrt() - 2.0)).abs() < 1e-9, "{t}");
    assert_eq!(v["profiles"][0][0].as_f64(), Some(0.0));
}

#[test]
fn solve_partial_csv() {
    let out = run(&["solve", "--concept", "partial", "--chi1", "0.6", "--chi2", "0.9", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("theta1,theta2,residual"));
    assert_eq!(lines.next(), Some("0,0,0"));
    let row: Vec<f64> = lines.next().unwrap().split(',').map(|x| x.parse().unwrap()).collect();
    assert!((row[0] - 1.0 / 3.0).abs() < 1e-11 && (row[1] - 4.0 / 9.0).abs() < 1e-11);
}

#[test]
fn solve_bayes_nash_is_no_trade() {
    let out = run(&["solve", "--concept", "bne", "--family", "triangle", "--param", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["profiles"], serde_json::json!([[0.0, 0.0]]));
}

#[test]
fn sweeps_are_deterministic_csv() {
    let args = [
        "sweep",
        "--family",
        "contamination",
        "--concept",
        "symmetric-ckne",
        "--sweep-param",
        "param",
        "--start",
        "0",
        "--stop",
        "0.9",
        "--steps",
        "10",
        "--format",
        "csv",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("param,threshold"));
    assert_eq!(text.lines().count(), 11);

    let w = run(&[
        "sweep",
        "--concept",
        "welfare",
        "--sweep-param",
        "chi1",
        "--chi2",
        "0.6",
        "--start",
        "0.5",
        "--stop",
        "1",
        "--steps",
        "3",
        "--format",
        "csv",
    ]);
    assert_eq!(w.status.code(), Some(0));
    assert!(String::from_utf8(w.stdout).unwrap().starts_with("chi,U,V\n"));
}

#[test]
fn verify_passes_and_detects_perturbation() {
    let base =
        ["verify", "--family", "contamination", "--param", "0.75", "--concept", "symmetric-ckne", "--games", "100000"];
    let ok = run(&base);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json(&ok)["passed"], Value::Bool(true));

    let mut bad = base.to_vec();
    bad.extend(["--perturb", "0.05"]);
    let out = run(&bad);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json(&out)["passed"], Value::Bool(false));
}

#[test]
fn verify_is_independent_of_thread_count() {
    let args = ["verify", "--concept", "partial", "--chi1", "0.6", "--chi2", "0.9", "--games", "200000", "--seed", "5"];
    let with = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_cursed-knight"))
            .args(args)
            .env("CURSED_KNIGHT_THREADS", threads)
            .output()
            .unwrap()
    };
    let (one, four) = (with("1"), with("4"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn configuration_errors_exit_one() {
    assert_eq!(run(&["solve", "--family", "bogus", "--concept", "bne"]).status.code(), Some(1));
    assert_eq!(run(&["solve", "--no-such-flag"]).status.code(), Some(1));
    assert_eq!(run(&["solve", "--concept", "partial", "--chi1", "1.5", "--chi2", "0.2"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn config_file_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    let dest = dir.path().join("out.json");
    std::fs::write(&cfg, r#"{"family": "epsilon", "param": 0.2, "concept": "ambiguous-ckne"}"#).unwrap();
    let out = run(&["solve", "--config", cfg.to_str().unwrap(), "--output", dest.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&dest).unwrap()).unwrap();
    let t = v["profiles"][1][0].as_f64().unwrap();
    assert!((t - (-0.8 + 1.0 + 4.2f64.sqrt()) / 4.0).abs() < 1e-9, "{t}");

    let over = run(&["solve", "--config", cfg.to_str().unwrap(), "--param", "0.1"]);
    let t = json(&over)["profiles"][1][0].as_f64().unwrap();
    assert!((t - (-0.4 + 1.0 + 2.6f64.sqrt()) / 4.0).abs() < 1e-9, "{t}");

    std::fs::write(&cfg, r#"{"family": "epsilon", "unknown-key": 1}"#).unwrap();
    assert_eq!(run(&["solve", "--config", cfg.to_str().unwrap()]).status.code(), Some(1));
}
