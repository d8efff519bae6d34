// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;
use std::process::{Command, Output};

const SUBCOMMANDS: [&str; 6] = ["single-step", "two-step", "markov-scan", "delta-e", "ghz", "validate"];

fn collisim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_collisim"))
        .args(args)
        .env_remove("COLLISIM_OUT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines().map(|l| l.split(',').map(str::to_string).collect()).collect()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("collisim-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn help_lists_every_flag_with_default() {
    for sub in SUBCOMMANDS {
        let o = collisim(&[sub, "--help"]);
        assert!(o.status.success());
        let text = stdout(&o);
        let flag_lines: Vec<&str> = text.lines().filter(|l| l.trim_start().starts_with("--")).collect();
        assert!(!flag_lines.is_empty());
        for line in flag_lines {
            assert!(line.contains("[default:"), "{sub}: {line}");
        }
    }
}

#[test]
fn markov_scan_sign_structure() {
    let o = collisim(&["markov-scan", "--a", "0.05", "--eps1", "0.01", "--eps2", "0.02", "--Q-grid", "-1:1:201"]);
    assert!(o.status.success());
    let table = rows(&stdout(&o));
    assert_eq!(
        table[0],
        ["Q", "a", "eps1", "eps2", "min_eigenvalue", "is_cp", "negative_count", "error"]
    );
    assert_eq!(table.len(), 202);
    for row in &table[1..] {
        let q: f64 = row[0].parse().unwrap();
        assert_eq!(row[5], (q <= 0.0).to_string(), "Q = {q}");
    }
}

#[test]
fn uncorrelated_two_step_has_no_correction() {
    let o = collisim(&["two-step", "--eps1", "0.01", "--eps2", "0.01", "--q", "0.5", "--a", "1", "--theta", "1.57", "--phi", "0"]);
    assert!(o.status.success());
    let table = rows(&stdout(&o));
    let col = table[0].iter().position(|h| h == "correction_norm").unwrap();
    let norm: f64 = table[1][col].parse().unwrap();
    assert!(norm.abs() <= 1e-12);
}

#[test]
fn floats_round_trip_through_csv() {
    let o = collisim(&["markov-scan", "--Q-grid", "-1:1:7"]);
    for row in &rows(&stdout(&o))[1..] {
        let x: f64 = row[4].parse().unwrap();
        assert_eq!(format!("{x:?}"), row[4]);
    }
}

#[test]
fn validate_passes() {
    let o = collisim(&["validate"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let table = rows(&stdout(&o));
    assert_eq!(table[0], ["invariant", "status", "worst", "tolerance"]);
    assert!(table[1..].iter().all(|r| r[1] == "PASS"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(collisim(&["two-step", "--q", "0.5", "--Q", "0"]).status.code(), Some(2));
    assert_eq!(collisim(&["markov-scan", "--Q-grid", "1:2"]).status.code(), Some(2));
    assert_eq!(collisim(&["markov-scan", "--bogus", "1"]).status.code(), Some(2));
    assert_eq!(collisim(&["ghz", "--config", "/definitely/not/here"]).status.code(), Some(2));
    assert_eq!(collisim(&[]).status.code(), Some(2));
}

#[test]
fn domain_errors() {
    let fatal = collisim(&["single-step", "--eps1", "0.7", "--eps2", "0.6"]);
    assert_eq!(fatal.status.code(), Some(1));
    let table = rows(&stdout(&fatal));
    assert!(!table[1].last().unwrap().is_empty());

    // In a scan, bad points become rows and the run succeeds.
    let scan = collisim(&["markov-scan", "--eps1", "0.6", "--eps2", "0.1", "--Q-grid", "-1:1:3"]);
    assert_eq!(scan.status.code(), Some(0));
    let table = rows(&stdout(&scan));
    let errors: Vec<bool> = table[1..].iter().map(|r| !r[7].is_empty()).collect();
    assert_eq!(errors, vec![true, false, true]);
}

#[test]
fn config_file_layers_under_flags() {
    let dir = scratch("config");
    let cfg = dir.join("run.cfg");
    std::fs::write(&cfg, "# two-step defaults\neps1 = 0.05\nq = 1\na = 0.5\n").unwrap();
    let cfg = cfg.to_str().unwrap();

    let from_file = rows(&stdout(&collisim(&["two-step", "--config", cfg])));
    assert_eq!(&from_file[1][..5], ["0.5", "0.05", "0.02", "1.0", "1.0"]);

    let overridden = rows(&stdout(&collisim(&["two-step", "--config", cfg, "--Q", "0", "--a", "1"])));
    assert_eq!(&overridden[1][..5], ["1.0", "0.05", "0.02", "0.5", "0.0"]);

    std::fs::write(dir.join("bad.cfg"), "q = 0.2\nQ = 0.1\n").unwrap();
    let o = collisim(&["two-step", "--config", dir.join("bad.cfg").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_destinations() {
    let dir = scratch("out");
    let explicit = dir.join("scan.csv");
    let o = collisim(&["markov-scan", "--Q-grid", "0:1:2", "--out", explicit.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&explicit).unwrap().starts_with("Q,a,"));

    let o = Command::new(env!("CARGO_BIN_EXE_collisim"))
        .args(["ghz", "--n-max", "2"])
        .env("COLLISIM_OUT", &dir)
        .output()
        .unwrap();
    assert!(o.status.success());
    let text = std::fs::read_to_string(dir.join("ghz.csv")).unwrap();
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn runs_are_byte_identical() {
    let cases: [&[&str]; 6] = [
        &["single-step", "--a", "0.7"],
        &["two-step", "--Q", "0.8", "--a", "1"],
        &["markov-scan", "--a-grid", "0:1:5", "--Q-grid", "-1:1:21"],
        &["delta-e", "--theta-grid", "0:pi:5", "--Q-grid", "-1:1:5"],
        &["ghz"],
        &["validate", "--draws", "8"],
    ];
    for args in cases {
        let first = collisim(args);
        let second = collisim(args);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}
