//! End-to-end runs of every subcommand against checked-in golden files.
//!
//! Each case runs twice in a fresh scratch directory holding copies of the
//! sample systems and fixtures; both runs must be byte-identical and match
//! `tests/golden/<case>.*`. Set `UPDATE_GOLDEN=1` to rewrite the goldens.

mod common;

use common::{check_golden, run, CASES};

fn golden(subcommand: &str) {
    let prefix = format!("{subcommand}_");
    let cases: Vec<_> = CASES.iter().filter(|c| c.name.starts_with(&prefix)).collect();
    assert!(!cases.is_empty());
    for case in cases {
        if let Err(e) = check_golden(case) {
            panic!("{e}");
        }
    }
}

#[test]
fn ball() {
    golden("ball");
}

#[test]
fn build() {
    golden("build");
}

#[test]
fn verify() {
    golden("verify");
}

#[test]
fn halfspace() {
    golden("halfspace");
}

#[test]
fn disjoint() {
    golden("disjoint");
}

#[test]
fn homology() {
    golden("homology");
}

#[test]
fn render() {
    golden("render");
}

#[test]
fn timing_is_opt_in() {
    let out = run("timing", 0, &[&["ball", "d2.racs", "--radius", "1", "--timing"]], &[]).unwrap();
    assert!(out.stderr.starts_with("time "));
    let out = run("timing", 1, &[&["ball", "d2.racs", "--radius", "1"]], &[]).unwrap();
    assert!(out.stderr.is_empty());
}
