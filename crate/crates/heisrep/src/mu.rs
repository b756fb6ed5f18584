//! Closed-form minimal faithful dimensions for the family, the epsilon
//! defect of the direct sum, and the integer-packing brute-force oracle.
//!
//! All integer square roots go through `min{t : t^2 >= 4k}`; no floating
//! point is involved, so the ceilings cannot be off by one.

use crate::error::Error;
use crate::heisenberg::{minimal_packing, PackingParams};

/// `ceil(2 sqrt k)`, computed as the smallest `t` with `t^2 >= 4k`.
pub fn ceil_2_sqrt(k: u64) -> u64 {
    let four_k = (k as u128) * 4;
    let s = four_k.isqrt() as u64;
    if (s as u128) * (s as u128) >= four_k {
        s
    } else {
        s + 1
    }
}

/// Minimal dimension of a faithful nilrepresentation of `h_m ⊕ a_n`:
/// `m + ceil(2 sqrt(n + 1))`.
pub fn mu_nil_value(m: u64, n: u64) -> u64 {
    m + ceil_2_sqrt(n + 1)
}

/// Minimal dimension of a faithful representation of `h_m ⊕ a_n`:
/// `m + ceil(2 sqrt n)` for `n >= 1`. For `n = 0` the packing formula does
/// not apply; the value is `m + 2` (the canonical representation) for
/// `m >= 1` and `1` for the one-dimensional abelian algebra.
pub fn mu_value(m: u64, n: u64) -> u64 {
    if n >= 1 {
        m + ceil_2_sqrt(n)
    } else if m >= 1 {
        m + 2
    } else {
        1
    }
}

/// Minimal faithful representation dimension of the abelian algebra `a_n`:
/// `ceil(2 sqrt(n - 1))` for `n >= 2`, and `1` for `n = 1` (a nonzero 1x1
/// scalar). Both cases realize `min{d >= 1 : floor(d^2/4) + 1 >= n}`.
pub fn mu_abelian(n: u64) -> Result<u64, Error> {
    match n {
        0 => Err(Error::InvalidParameter("mu_abelian needs n >= 1".into())),
        1 => Ok(1),
        _ => Ok(ceil_2_sqrt(n - 1)),
    }
}

/// Minimal faithful nilrepresentation dimension of `a_n`: `ceil(2 sqrt n)`.
pub fn mu_nil_abelian(n: u64) -> Result<u64, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "mu_nil_abelian needs n >= 1".into(),
        ));
    }
    Ok(ceil_2_sqrt(n))
}

/// The defects `(epsilon_mu, epsilon_mu_nil)` by which the direct sum falls
/// short of additivity, for `m, n >= 1`:
/// `epsilon_mu_nil = mu_nil(h_m) + mu_nil(a_n) - mu_nil(h_m ⊕ a_n)` and
/// likewise for `mu`. Both always land in `{1, 2}`; a value outside that set
/// is reported as an error rather than silently returned.
pub fn epsilon_values(m: u64, n: u64) -> Result<(u64, u64), Error> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter(
            "epsilon defects are defined for m, n >= 1".into(),
        ));
    }
    let e_mu = (m + 2 + mu_abelian(n)?) as i64 - mu_value(m, n) as i64;
    let e_nil = (m + 2 + mu_nil_abelian(n)?) as i64 - mu_nil_value(m, n) as i64;
    if !(1..=2).contains(&e_mu) || !(1..=2).contains(&e_nil) {
        return Err(Error::EpsilonOutOfRange {
            m,
            n,
            epsilon_mu: e_mu,
            epsilon_mu_nil: e_nil,
        });
    }
    Ok((e_mu as u64, e_nil as u64))
}

/// Brute-force `min{a + b : ab >= k}` by direct search. Independent of
/// `ceil_2_sqrt`: the loop bound comes from the running minimum alone
/// (any pair with first component `a` has sum at least `a + 1`).
pub fn brute_force_min_sum(k: u64) -> u64 {
    assert!(k >= 1, "the packing minimum needs k >= 1");
    let mut best = u64::MAX;
    let mut a = 1;
    while a + 1 < best {
        let b = k.div_ceil(a);
        best = best.min(a + b);
        a += 1;
    }
    best
}

/// Result of sweeping the packing identity up to `k_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PackingReport {
    Pass { k_max: u64 },
    Mismatch { k: u64, brute: u64, formula: u64 },
}

impl PackingReport {
    pub fn is_pass(&self) -> bool {
        matches!(self, PackingReport::Pass { .. })
    }
}

/// Compare the brute-force packing minimum with `ceil_2_sqrt(k)` for every
/// `k <= k_max`; report the first mismatch, if any.
pub fn packing_oracle(k_max: u64) -> PackingReport {
    for k in 1..=k_max {
        let brute = brute_force_min_sum(k);
        let formula = ceil_2_sqrt(k);
        if brute != formula {
            return PackingReport::Mismatch { k, brute, formula };
        }
    }
    PackingReport::Pass { k_max }
}

/// Witness attached to the `mu` value of a row: which construction attains it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepWitness {
    /// The scalar-shifted packing representation with these block sizes.
    Packing(PackingParams),
    /// The canonical `(m+2)`-dimensional representation (the `n = 0` case).
    CanonicalPi0,
    /// A nonzero 1x1 scalar (the one-dimensional abelian algebra).
    Scalar,
}

/// One row of the mu table: the closed-form values, the epsilon defects
/// where defined, and the packings witnessing the upper bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuResult {
    pub m: u64,
    pub n: u64,
    pub mu: u64,
    pub mu_nil: u64,
    pub epsilon_mu: Option<u64>,
    pub epsilon_mu_nil: Option<u64>,
    pub witness_nil_packing: PackingParams,
    pub witness_rep_packing: RepWitness,
}

/// Assemble the full row for `(m, n)`.
pub fn mu_result(m: u64, n: u64) -> Result<MuResult, Error> {
    let (epsilon_mu, epsilon_mu_nil) = if m >= 1 && n >= 1 {
        let (a, b) = epsilon_values(m, n)?;
        (Some(a), Some(b))
    } else {
        (None, None)
    };
    let witness_rep_packing = if n >= 1 {
        RepWitness::Packing(minimal_packing(n as usize))
    } else if m >= 1 {
        RepWitness::CanonicalPi0
    } else {
        RepWitness::Scalar
    };
    Ok(MuResult {
        m,
        n,
        mu: mu_value(m, n),
        mu_nil: mu_nil_value(m, n),
        epsilon_mu,
        epsilon_mu_nil,
        witness_nil_packing: minimal_packing((n + 1) as usize),
        witness_rep_packing,
    })
}
