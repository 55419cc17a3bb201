//! Acceptance gate: one line per criterion, `PASS` or `FAIL`.
//!
//! Criteria 3 and 12 are the long runs (a few minutes and about twenty
//! seconds on one core with the test profile); both run by default.

use std::io::Write;

use dichroma::claims::{run_claim, ClaimOptions};

fn gate(id: u8) {
    let out = run_claim(id, &ClaimOptions::default());
    let verdict = if out.passed { "PASS" } else { "FAIL" };
    let mut line = format!("criterion {:>2} {verdict} ({:.1}s) {}: {}", id, out.seconds, out.title, out.detail);
    if let Some(a) = &out.artifact {
        line.push_str(&format!(" [counterexample {a}]"));
    }
    // Written to the raw handle so the line shows even when output is captured.
    let _ = writeln!(std::io::stderr(), "{line}");
    assert!(out.passed, "{line}");
}

#[test]
fn criterion_01_st11() {
    gate(1);
}

#[test]
fn criterion_02_census_order_seven() {
    gate(2);
}

#[test]
fn criterion_03_census_orders_eight_and_nine() {
    gate(3);
}

#[test]
fn criterion_04_six_vertex_tournaments() {
    gate(4);
}

#[test]
fn criterion_05_transitive_subtournaments() {
    gate(5);
}

#[test]
fn criterion_06_thirteen_vertex_circulant() {
    gate(6);
}

#[test]
fn criterion_07_reduction_equivalence() {
    gate(7);
}

#[test]
fn criterion_08_oriented_gadgets() {
    gate(8);
}

#[test]
fn criterion_09_structure_suite() {
    gate(9);
}

#[test]
fn criterion_10_bounds_suite() {
    gate(10);
}

#[test]
fn criterion_11_oracle_suites() {
    gate(11);
}

#[test]
fn criterion_12_order_ten_tournaments() {
    gate(12);
}
