//! The verification suites behind the acceptance tests and `selftest`.
//!
//! Each check sweeps a parameterized grid and reports the first
//! counterexample it finds; the acceptance tests drive them at the full
//! bounds, `selftest --level quick` at trimmed ones.

use std::time::{Duration, Instant};

use num_traits::Zero;

use crate::heisenberg::{
    build_heisenberg_abelian, canonical_pi0, minimal_faithful_nilrep, minimal_faithful_rep,
    minimal_packing, pi_ab, pi_tilde_ab, z_index, PackingParams, Representation,
};
use crate::linalg::RatMatrix;
use crate::mu::{
    brute_force_min_sum, ceil_2_sqrt, epsilon_values, mu_abelian, mu_nil_abelian, mu_nil_value,
    mu_value,
};
use crate::random::{element, invertible_matrix, rng_from_seed};
use crate::repcheck::{
    engel_flag, is_faithful, is_faithful_via_center, is_homomorphism, rep_kernel, EngelOutcome,
};
use crate::symbolic;

/// Outcome of one suite check: a pass flag, a one-line detail, and the
/// elapsed wall-clock time.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CheckOutcome {
    fn finish(name: &'static str, started: Instant, result: Result<String, String>) -> Self {
        let (pass, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        CheckOutcome {
            name,
            pass,
            detail,
            elapsed: started.elapsed(),
        }
    }
}

fn grid_points(m_max: usize, n_max: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..=m_max).flat_map(move |m| {
        (0..=n_max).flat_map(move |n| {
            (1..=n + 2).flat_map(move |a| (1..=n + 2).map(move |b| (m, n, a, b)))
        })
    })
}

/// Every grid member of both families must satisfy the bracket relations
/// exactly.
pub fn check_homomorphism_grid(m_max: usize, n_max: usize) -> CheckOutcome {
    let started = Instant::now();
    let mut points = 0usize;
    for (m, n, a, b) in grid_points(m_max, n_max) {
        let p = PackingParams { a, b };
        let rep = pi_ab(m, n, p).expect("positive packing");
        if !is_homomorphism(&rep).is_pass() {
            return CheckOutcome::finish(
                "homomorphism-grid",
                started,
                Err(format!(
                    "pi_({a},{b}) on (m, n) = ({m}, {n}) is not a homomorphism"
                )),
            );
        }
        points += 1;
        if n >= 1 {
            let rep = pi_tilde_ab(m, n, p).expect("positive packing, n >= 1");
            if !is_homomorphism(&rep).is_pass() {
                return CheckOutcome::finish(
                    "homomorphism-grid",
                    started,
                    Err(format!(
                        "pi~_({a},{b}) on (m, n) = ({m}, {n}) is not a homomorphism"
                    )),
                );
            }
            points += 1;
        }
    }
    CheckOutcome::finish(
        "homomorphism-grid",
        started,
        Ok(format!("{points} representations verified exactly")),
    )
}

/// Faithfulness holds exactly on the predicted thresholds, and the kernel of
/// the packing family has the predicted dimension.
pub fn check_faithfulness_grid(m_max: usize, n_max: usize) -> CheckOutcome {
    let started = Instant::now();
    let mut points = 0usize;
    for (m, n, a, b) in grid_points(m_max, n_max) {
        let p = PackingParams { a, b };
        let rep = pi_ab(m, n, p).expect("positive packing");
        let faithful = is_faithful(&rep);
        if faithful != (a * b > n) {
            return CheckOutcome::finish(
                "faithfulness-thresholds",
                started,
                Err(format!(
                    "pi_({a},{b}) on ({m}, {n}): faithful = {faithful}, ab >= n+1 = {}",
                    a * b > n
                )),
            );
        }
        let kernel_dim = rep_kernel(&rep).dim();
        let expected = (n + 1).saturating_sub(a * b);
        if kernel_dim != expected {
            return CheckOutcome::finish(
                "faithfulness-thresholds",
                started,
                Err(format!(
                    "pi_({a},{b}) on ({m}, {n}): kernel dimension {kernel_dim}, expected {expected}"
                )),
            );
        }
        points += 1;
        if n >= 1 {
            let rep = pi_tilde_ab(m, n, p).expect("positive packing, n >= 1");
            let faithful = is_faithful(&rep);
            if faithful != (a * b >= n) {
                return CheckOutcome::finish(
                    "faithfulness-thresholds",
                    started,
                    Err(format!(
                        "pi~_({a},{b}) on ({m}, {n}): faithful = {faithful}, ab >= n = {}",
                        a * b >= n
                    )),
                );
            }
            points += 1;
        }
    }
    CheckOutcome::finish(
        "faithfulness-thresholds",
        started,
        Ok(format!("{points} kernels match the packing count")),
    )
}

/// The packing family triangularizes (in at most three rounds) and random
/// element images cube to zero; the scalar-shifted family never
/// triangularizes.
pub fn check_nilpotency_grid(
    m_max: usize,
    n_max: usize,
    samples_per_point: usize,
    seed: u64,
) -> CheckOutcome {
    let started = Instant::now();
    let mut rng = rng_from_seed(seed);
    let mut cubes = 0usize;
    let mut flags_checked = 0usize;
    for (m, n, a, b) in grid_points(m_max, n_max) {
        let p = PackingParams { a, b };
        let rep = pi_ab(m, n, p).expect("positive packing");
        match engel_flag(&rep) {
            Ok(EngelOutcome::Success { stages, basis }) if stages <= 3 => {
                // On the small spaces, confirm the returned flag really does
                // strictly triangularize every basis image.
                if m + a + b <= 7 {
                    if let Err(msg) = verify_strictly_upper(&rep, &basis) {
                        return CheckOutcome::finish(
                            "nilpotency-grid",
                            started,
                            Err(format!("pi_({a},{b}) on ({m}, {n}): {msg}")),
                        );
                    }
                    flags_checked += 1;
                }
            }
            Ok(EngelOutcome::Success { stages, .. }) => {
                return CheckOutcome::finish(
                    "nilpotency-grid",
                    started,
                    Err(format!(
                        "pi_({a},{b}) on ({m}, {n}) needed {stages} flag stages"
                    )),
                );
            }
            other => {
                return CheckOutcome::finish(
                    "nilpotency-grid",
                    started,
                    Err(format!(
                        "pi_({a},{b}) on ({m}, {n}) failed to triangularize: {other:?}"
                    )),
                );
            }
        }
        let dim = rep.algebra().dim();
        for _ in 0..samples_per_point {
            let v = element(&mut rng, dim);
            let img = rep.image(&v).expect("dimension matches");
            let square = img.mul(&img).expect("square");
            if !square.mul(&img).expect("cube").is_zero() {
                return CheckOutcome::finish(
                    "nilpotency-grid",
                    started,
                    Err(format!(
                        "pi_({a},{b}) on ({m}, {n}): a random element image does not cube to zero"
                    )),
                );
            }
            cubes += 1;
        }
        if n >= 1 {
            let rep = pi_tilde_ab(m, n, p).expect("positive packing, n >= 1");
            match engel_flag(&rep) {
                Ok(EngelOutcome::Failure { .. }) => {}
                other => {
                    return CheckOutcome::finish(
                        "nilpotency-grid",
                        started,
                        Err(format!(
                            "pi~_({a},{b}) on ({m}, {n}) should not triangularize, got {other:?}"
                        )),
                    );
                }
            }
        }
    }
    CheckOutcome::finish(
        "nilpotency-grid",
        started,
        Ok(format!(
            "all flags built ({flags_checked} triangularizations re-verified); {cubes} random cubes vanished"
        )),
    )
}

/// Change basis by the flag and demand a strictly upper triangular result
/// for every basis image.
fn verify_strictly_upper(
    rep: &Representation,
    basis: &[Vec<crate::linalg::Rational>],
) -> Result<(), String> {
    let s = rep.space_dim();
    if basis.len() != s {
        return Err(format!(
            "flag has {} vectors for dimension {s}",
            basis.len()
        ));
    }
    let mut t = RatMatrix::zero(s, s);
    for (j, v) in basis.iter().enumerate() {
        for (i, e) in v.iter().enumerate() {
            t.set(i, j, e.clone());
        }
    }
    let t_inv = t
        .inverse()
        .ok_or_else(|| "flag basis is singular".to_string())?;
    for (idx, m) in rep.matrices().iter().enumerate() {
        let conj = t_inv
            .mul(m)
            .and_then(|x| x.mul(&t))
            .map_err(|e| e.to_string())?;
        for i in 0..s {
            for j in 0..=i {
                if !conj.get(i, j).is_zero() {
                    return Err(format!(
                        "basis image {idx} is not strictly upper triangular at ({i}, {j})"
                    ));
                }
            }
        }
    }
    Ok(())
}

/// The minimal-dimension selectors attain the closed-form values and pass
/// the relevant checks.
pub fn check_witness_dimensions(m_max: usize, n_max: usize) -> CheckOutcome {
    let started = Instant::now();
    for m in 0..=m_max {
        for n in 0..=n_max {
            let nilrep = minimal_faithful_nilrep(m, n);
            let expected = mu_nil_value(m as u64, n as u64) as usize;
            if nilrep.space_dim() != expected {
                return CheckOutcome::finish(
                    "witness-dimensions",
                    started,
                    Err(format!(
                        "nil witness for ({m}, {n}) has dimension {}, expected {expected}",
                        nilrep.space_dim()
                    )),
                );
            }
            if let Err(msg) = verify_witness(&nilrep, true) {
                return CheckOutcome::finish(
                    "witness-dimensions",
                    started,
                    Err(format!("nil witness for ({m}, {n}): {msg}")),
                );
            }
            let (rep, kind) = if n >= 1 {
                (minimal_faithful_rep(m, n).expect("n >= 1"), "packing")
            } else if m >= 1 {
                (canonical_pi0(m).expect("m >= 1"), "canonical")
            } else {
                let alg = build_heisenberg_abelian(0, 0);
                (
                    Representation::new(alg, 1, vec![RatMatrix::identity(1)])
                        .expect("one matrix for the one-dimensional algebra"),
                    "scalar",
                )
            };
            let expected = mu_value(m as u64, n as u64) as usize;
            if rep.space_dim() != expected {
                return CheckOutcome::finish(
                    "witness-dimensions",
                    started,
                    Err(format!(
                        "{kind} witness for ({m}, {n}) has dimension {}, expected {expected}",
                        rep.space_dim()
                    )),
                );
            }
            if let Err(msg) = verify_witness(&rep, false) {
                return CheckOutcome::finish(
                    "witness-dimensions",
                    started,
                    Err(format!("{kind} witness for ({m}, {n}): {msg}")),
                );
            }
        }
    }
    // The worked example: (m, n) = (2, 4) packs into (2, 3) and dimensions 7 / 6.
    if minimal_packing(5) != (PackingParams { a: 2, b: 3 })
        || minimal_faithful_nilrep(2, 4).space_dim() != 7
        || minimal_faithful_rep(2, 4).expect("n >= 1").space_dim() != 6
    {
        return CheckOutcome::finish(
            "witness-dimensions",
            started,
            Err("the (2, 4) example values are not reproduced".into()),
        );
    }
    CheckOutcome::finish(
        "witness-dimensions",
        started,
        Ok(format!(
            "witnesses attain the formulas for m <= {m_max}, n <= {n_max}"
        )),
    )
}

fn verify_witness(rep: &Representation, require_nil: bool) -> Result<(), String> {
    if !is_homomorphism(rep).is_pass() {
        return Err("not a homomorphism".into());
    }
    if !is_faithful(rep) {
        return Err("not faithful".into());
    }
    if require_nil {
        match engel_flag(rep) {
            Ok(EngelOutcome::Success { .. }) => {}
            other => return Err(format!("not a nilrepresentation: {other:?}")),
        }
    }
    Ok(())
}

/// Brute-force packing minimum, the closed-form ceiling, and the packing
/// selector agree for every `k` up to `k_max`.
pub fn check_packing_identity(k_max: u64) -> CheckOutcome {
    check_packing_identity_against(ceil_2_sqrt, k_max)
}

/// The sweep with an injectable formula, so a deliberately corrupted formula
/// can be shown to trip the check (the selftest's mutation fixture).
fn check_packing_identity_against(formula: impl Fn(u64) -> u64, k_max: u64) -> CheckOutcome {
    let started = Instant::now();
    for k in 1..=k_max {
        let brute = brute_force_min_sum(k);
        let predicted = formula(k);
        if brute != predicted {
            return CheckOutcome::finish(
                "packing-identity",
                started,
                Err(format!("k = {k}: brute force {brute}, formula {predicted}")),
            );
        }
        let p = minimal_packing(k as usize);
        if p.sum() as u64 != predicted || (p.product() as u64) < k {
            return CheckOutcome::finish(
                "packing-identity",
                started,
                Err(format!(
                    "k = {k}: minimal_packing gives ({}, {}) with sum {}",
                    p.a,
                    p.b,
                    p.sum()
                )),
            );
        }
    }
    CheckOutcome::finish(
        "packing-identity",
        started,
        Ok(format!("identity holds for every k <= {k_max}")),
    )
}

/// Direct faithfulness and the center criterion agree on seeded randomized
/// representations: packing members with random block sizes, a random
/// subset of the packing slots zeroed, conjugated by a random invertible
/// basis change.
pub fn check_oracle_equivalence(rep_count: usize, seed: u64) -> CheckOutcome {
    let started = Instant::now();
    let mut rng = rng_from_seed(seed);
    use rand::RngExt;
    for trial in 0..rep_count {
        let m = rng.random_range(0..=3usize);
        let n = rng.random_range(0..=6usize);
        let a = rng.random_range(1..=4usize);
        let b = rng.random_range(1..=4usize);
        let mut rep = pi_ab(m, n, PackingParams { a, b }).expect("positive packing");
        // Zero a random subset of the occupied packing slots. The z slot can
        // only be dropped when m = 0: with X, Y generators present the
        // bracket [X_i, Y_i] = Z pins the Z image.
        let dim = rep.algebra().dim();
        let zeroable: Vec<usize> = (0..dim)
            .filter(|&i| {
                let is_z = i == z_index(m);
                let is_abelian = i > z_index(m);
                (is_abelian || (is_z && m == 0)) && !rep.matrix(i).is_zero()
            })
            .collect();
        let mut zeroed = 0usize;
        for i in zeroable {
            if rng.random_bool(0.25) {
                let size = rep.space_dim();
                rep = rep
                    .with_matrix(i, RatMatrix::zero(size, size))
                    .expect("square zero image");
                zeroed += 1;
            }
        }
        // Zeroing a slot or overflowing the block is exactly what kills
        // faithfulness, and conjugation must not disturb it.
        let predicted = zeroed == 0 && a * b > n;
        let t = invertible_matrix(&mut rng, rep.space_dim());
        let conjugated = rep.conjugate(&t).expect("t is invertible");
        let direct = is_faithful(&conjugated);
        let via_center = match is_faithful_via_center(&conjugated) {
            Ok(v) => v,
            Err(e) => {
                return CheckOutcome::finish(
                    "center-criterion-oracle",
                    started,
                    Err(format!("trial {trial}: center criterion errored: {e}")),
                );
            }
        };
        if direct != via_center || direct != predicted {
            return CheckOutcome::finish(
                "center-criterion-oracle",
                started,
                Err(format!(
                    "trial {trial} (m={m}, n={n}, a={a}, b={b}, zeroed={zeroed}): \
                     direct {direct}, via center {via_center}, predicted {predicted}"
                )),
            );
        }
    }
    CheckOutcome::finish(
        "center-criterion-oracle",
        started,
        Ok(format!(
            "{rep_count} randomized representations, zero disagreements"
        )),
    )
}

/// Formula identities over the full square `0 <= m, n <= max`.
pub fn check_formula_sweep(max: u64) -> CheckOutcome {
    let started = Instant::now();
    for m in 0..=max {
        for n in 0..=max {
            let mu = mu_value(m, n);
            let mu_nil = mu_nil_value(m, n);
            if mu > mu_nil {
                return CheckOutcome::finish(
                    "formula-sweep",
                    started,
                    Err(format!("mu > mu_nil at ({m}, {n})")),
                );
            }
            if m >= 1 && n >= 1 {
                if mu >= 2 * m + n + 2 {
                    return CheckOutcome::finish(
                        "formula-sweep",
                        started,
                        Err(format!("mu not below 2m + n + 2 at ({m}, {n})")),
                    );
                }
                if let Err(e) = epsilon_values(m, n) {
                    return CheckOutcome::finish(
                        "formula-sweep",
                        started,
                        Err(format!("epsilon defect failed at ({m}, {n}): {e}")),
                    );
                }
            }
            if m == 0 {
                let expected_mu = mu_abelian(n + 1).expect("n + 1 >= 1");
                let expected_nil = mu_nil_abelian(n + 1).expect("n + 1 >= 1");
                if mu != expected_mu || mu_nil != expected_nil {
                    return CheckOutcome::finish(
                        "formula-sweep",
                        started,
                        Err(format!(
                            "m = 0 disagrees with the abelian values at n = {n}"
                        )),
                    );
                }
            }
            if n == 0 && m >= 1 && (mu != m + 2 || mu_nil != m + 2) {
                return CheckOutcome::finish(
                    "formula-sweep",
                    started,
                    Err(format!("n = 0 values differ from m + 2 at m = {m}")),
                );
            }
        }
    }
    CheckOutcome::finish(
        "formula-sweep",
        started,
        Ok(format!("all identities hold on the {max}x{max} square")),
    )
}

/// The symbolic output of `construct` reproduces the three displayed
/// matrices and the 5x3 packing-block layout, position for position.
pub fn check_golden_patterns() -> CheckOutcome {
    let started = Instant::now();
    let result = golden_patterns_inner();
    CheckOutcome::finish("golden-patterns", started, result)
}

fn golden_patterns_inner() -> Result<String, String> {
    use crate::commands::{cmd_construct, ConstructFormat, Variant};

    let parse_grid = |text: &str| -> Vec<Vec<String>> {
        text.lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split_whitespace().map(str::to_string).collect())
            .collect()
    };
    let expect = |label: &str, got: Vec<Vec<String>>, want: &[&[&str]]| -> Result<(), String> {
        let want: Vec<Vec<String>> = want
            .iter()
            .map(|r| r.iter().map(|s| s.to_string()).collect())
            .collect();
        if got != want {
            return Err(format!("{label}: placement map mismatch\ngot: {got:?}"));
        }
        Ok(())
    };

    let text = cmd_construct(1, 0, Some(1), Some(1), Variant::Nil, ConstructFormat::Text)
        .map_err(|e| e.to_string())?;
    expect(
        "pi_0 (m = 1)",
        parse_grid(&text),
        &[&["0", "x_1", "z"], &["0", "0", "y_1"], &["0", "0", "0"]],
    )?;

    let text = cmd_construct(2, 4, Some(2), Some(3), Variant::Nil, ConstructFormat::Text)
        .map_err(|e| e.to_string())?;
    expect(
        "7x7 packing display",
        parse_grid(&text),
        &[
            &["0", "0", "x_1", "x_2", "z", "a_1", "a_2"],
            &["0", "0", "0", "0", "a_3", "a_4", "0"],
            &["0", "0", "0", "0", "y_1", "0", "0"],
            &["0", "0", "0", "0", "y_2", "0", "0"],
            &["0", "0", "0", "0", "0", "0", "0"],
            &["0", "0", "0", "0", "0", "0", "0"],
            &["0", "0", "0", "0", "0", "0", "0"],
        ],
    )?;

    let text = cmd_construct(2, 4, Some(1), Some(3), Variant::Nil, ConstructFormat::Text)
        .map_err(|e| e.to_string())?;
    expect(
        "6x6 packing display",
        parse_grid(&text),
        &[
            &["0", "x_1", "x_2", "z", "a_1", "a_2"],
            &["0", "0", "0", "y_1", "0", "0"],
            &["0", "0", "0", "y_2", "0", "0"],
            &["0", "0", "0", "0", "0", "0"],
            &["0", "0", "0", "0", "0", "0"],
            &["0", "0", "0", "0", "0", "0"],
        ],
    )?;

    // The 5x3 packing block for n = 10 sits at rows 0..5, cols 5..8 of the
    // m = 0 member (block sizes a = 5, m = 0, b = 3).
    let text = cmd_construct(0, 10, Some(5), Some(3), Variant::Nil, ConstructFormat::Text)
        .map_err(|e| e.to_string())?;
    let grid = parse_grid(&text);
    let block: Vec<Vec<String>> = grid[0..5].iter().map(|row| row[5..8].to_vec()).collect();
    expect(
        "5x3 packing block (n = 10)",
        block,
        &[
            &["z", "a_1", "a_2"],
            &["a_3", "a_4", "a_5"],
            &["a_6", "a_7", "a_8"],
            &["a_9", "a_10", "0"],
            &["0", "0", "0"],
        ],
    )?;

    // Cross-check the standalone block pattern as well.
    let tau = symbolic::tau_ab_pattern(5, 3, 10);
    let tau_grid: Vec<Vec<String>> = (0..tau.rows())
        .map(|i| tau.row_tokens(i).into_iter().map(str::to_string).collect())
        .collect();
    expect(
        "tau block pattern",
        tau_grid,
        &[
            &["z", "a_1", "a_2"],
            &["a_3", "a_4", "a_5"],
            &["a_6", "a_7", "a_8"],
            &["a_9", "a_10", "0"],
            &["0", "0", "0"],
        ],
    )?;

    Ok("all four displays match position for position".into())
}

/// Engel-flag/witness consistency on both families: accept implies random
/// cubes vanish, reject implies a non-nilpotent image exists.
pub fn check_engel_consistency(samples: usize, seed: u64) -> CheckOutcome {
    let started = Instant::now();
    let mut rng = rng_from_seed(seed);
    for (m, n, a, b) in [(1, 1, 1, 2), (2, 3, 2, 2), (0, 4, 2, 3), (3, 2, 1, 1)] {
        let p = PackingParams { a, b };
        let rep = pi_ab(m, n, p).expect("positive packing");
        let dim = rep.algebra().dim();
        match engel_flag(&rep) {
            Ok(EngelOutcome::Success { .. }) => {
                for _ in 0..samples {
                    let img = rep.image(&element(&mut rng, dim)).expect("dimension");
                    if !img.is_nilpotent().expect("square") {
                        return CheckOutcome::finish(
                            "engel-consistency",
                            started,
                            Err(format!(
                                "flag succeeded but an image is not nilpotent ({m}, {n}, {a}, {b})"
                            )),
                        );
                    }
                }
            }
            other => {
                return CheckOutcome::finish(
                    "engel-consistency",
                    started,
                    Err(format!("pi_ab flag failed: {other:?}")),
                );
            }
        }
        if n >= 1 {
            let rep = pi_tilde_ab(m, n, p).expect("n >= 1");
            match engel_flag(&rep) {
                Ok(EngelOutcome::Failure { .. }) => {
                    // Record a witness: some basis image must be non-nilpotent.
                    let witness = rep
                        .matrices()
                        .iter()
                        .any(|mat| !mat.is_nilpotent().expect("square"));
                    if !witness {
                        return CheckOutcome::finish(
                            "engel-consistency",
                            started,
                            Err(format!(
                                "flag failed but every basis image is nilpotent ({m}, {n}, {a}, {b})"
                            )),
                        );
                    }
                }
                other => {
                    return CheckOutcome::finish(
                        "engel-consistency",
                        started,
                        Err(format!("pi~_ab flag unexpectedly gave {other:?}")),
                    );
                }
            }
        }
    }
    CheckOutcome::finish(
        "engel-consistency",
        started,
        Ok("flag verdicts agree with elementwise nilpotency".into()),
    )
}

/// Elementwise check backing the algebra invariants: antisymmetry of the
/// bracket on 100 random pairs per algebra, Jacobi on the constructed
/// family, and the center/class facts for m <= 6, n <= 10.
pub fn check_algebra_invariants(seed: u64) -> CheckOutcome {
    let started = Instant::now();
    let mut rng = rng_from_seed(seed);
    for m in 0..=6usize {
        for n in 0..=10usize {
            let alg = build_heisenberg_abelian(m, n);
            if !alg.check_jacobi().is_pass() {
                return CheckOutcome::finish(
                    "algebra-invariants",
                    started,
                    Err(format!("Jacobi fails on (m, n) = ({m}, {n})")),
                );
            }
            if alg.center().dim() != n + 1 {
                return CheckOutcome::finish(
                    "algebra-invariants",
                    started,
                    Err(format!("center dimension wrong on ({m}, {n})")),
                );
            }
            let expected_class = if m == 0 { Some(1) } else { Some(2) };
            if alg.nilpotency_class() != expected_class {
                return CheckOutcome::finish(
                    "algebra-invariants",
                    started,
                    Err(format!("nilpotency class wrong on ({m}, {n})")),
                );
            }
            for _ in 0..100 {
                let x = element(&mut rng, alg.dim());
                let y = element(&mut rng, alg.dim());
                let xy = alg.bracket(&x, &y).expect("dims match");
                let yx = alg.bracket(&y, &x).expect("dims match");
                if !xy.add(&yx).is_zero() {
                    return CheckOutcome::finish(
                        "algebra-invariants",
                        started,
                        Err(format!("bracket antisymmetry fails on ({m}, {n})")),
                    );
                }
            }
        }
    }
    CheckOutcome::finish(
        "algebra-invariants",
        started,
        Ok("Jacobi, center, class, antisymmetry verified".into()),
    )
}

/// Selftest depth.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelftestLevel {
    Quick,
    Full,
}

/// Run the suite at the given depth; returns the outcomes in order.
pub fn run_selftest(level: SelftestLevel, seed: u64) -> Vec<CheckOutcome> {
    let (m_max, n_max, samples, k_max, sweep, reps, witness_m, witness_n) = match level {
        SelftestLevel::Quick => (2, 3, 5, 10_000, 200, 25, 2, 6),
        SelftestLevel::Full => (4, 8, 50, 1_000_000, 1000, 100, 4, 12),
    };
    vec![
        check_algebra_invariants(seed),
        check_homomorphism_grid(m_max, n_max),
        check_faithfulness_grid(m_max, n_max),
        check_nilpotency_grid(m_max, n_max, samples, seed),
        check_witness_dimensions(witness_m, witness_n),
        check_packing_identity(k_max),
        check_oracle_equivalence(reps, seed),
        check_engel_consistency(samples.max(10), seed),
        check_formula_sweep(sweep),
        check_golden_patterns(),
    ]
}
