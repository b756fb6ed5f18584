//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (visible with `--nocapture`). Bounds and time budgets are
//! pinned here, not read from configuration.

use std::time::Duration;

use heisrep::random::DEFAULT_SEED;
use heisrep::suite::{
    check_faithfulness_grid, check_formula_sweep, check_golden_patterns, check_homomorphism_grid,
    check_nilpotency_grid, check_oracle_equivalence, check_packing_identity,
    check_witness_dimensions, CheckOutcome,
};

fn report(criterion: &str, outcome: &CheckOutcome, budget: Option<Duration>) {
    println!(
        "[{}] {criterion}: {} ({:.2?})",
        if outcome.pass { "PASS" } else { "FAIL" },
        outcome.detail,
        outcome.elapsed
    );
    assert!(outcome.pass, "{criterion}: {}", outcome.detail);
    if let Some(budget) = budget {
        assert!(
            outcome.elapsed < budget,
            "{criterion} exceeded its {budget:?} budget: {:?}",
            outcome.elapsed
        );
    }
}

/// Criterion 1: every grid member of both families is a homomorphism,
/// exactly, in under 30 seconds.
#[test]
fn criterion_1_homomorphism_grid() {
    let outcome = check_homomorphism_grid(4, 8);
    report(
        "criterion 1 (homomorphism grid)",
        &outcome,
        Some(Duration::from_secs(30)),
    );
}

/// Criterion 2: faithfulness iff the packing fits, with the exact kernel
/// dimension.
#[test]
fn criterion_2_faithfulness_thresholds() {
    let outcome = check_faithfulness_grid(4, 8);
    report("criterion 2 (faithfulness thresholds)", &outcome, None);
}

/// Criterion 3: the packing family triangularizes and random images cube to
/// zero; the scalar-shifted family never triangularizes.
#[test]
fn criterion_3_nilpotency() {
    let outcome = check_nilpotency_grid(4, 8, 50, DEFAULT_SEED);
    report("criterion 3 (nilpotency grid)", &outcome, None);
}

/// Criterion 4: the minimal witnesses attain the closed-form dimensions and
/// pass their checks, reproducing the (2, 4) example values 7 and 6.
#[test]
fn criterion_4_witness_dimensions() {
    let outcome = check_witness_dimensions(4, 12);
    report("criterion 4 (witness dimensions)", &outcome, None);
}

/// Criterion 5: brute-force packing minimum equals the integer ceiling for
/// every k up to 10^6, in under 60 seconds.
#[test]
fn criterion_5_packing_identity() {
    let outcome = check_packing_identity(1_000_000);
    report(
        "criterion 5 (packing identity)",
        &outcome,
        Some(Duration::from_secs(60)),
    );
}

/// Criterion 6: direct faithfulness and the center criterion agree on 100
/// seeded randomized representations.
#[test]
fn criterion_6_center_criterion_oracle() {
    let outcome = check_oracle_equivalence(100, DEFAULT_SEED);
    report("criterion 6 (center-criterion oracle)", &outcome, None);
}

/// Criterion 7: formula identities over the full 1000 x 1000 square in
/// under 10 seconds.
#[test]
fn criterion_7_formula_sweep() {
    let outcome = check_formula_sweep(1000);
    report(
        "criterion 7 (formula sweep)",
        &outcome,
        Some(Duration::from_secs(10)),
    );
}

/// Criterion 8: the symbolic output reproduces the displayed placement maps
/// position for position.
#[test]
fn criterion_8_golden_patterns() {
    let outcome = check_golden_patterns();
    report("criterion 8 (golden patterns)", &outcome, None);
}
