//! Exact-arithmetic toolkit for the Heisenberg Lie algebra with an abelian
//! factor: constructs the packing families of (nil)representations, decides
//! faithfulness and simultaneous strict triangularizability over the
//! rationals, and cross-checks the closed-form minimal dimensions against
//! brute-force oracles.
//!
//! - [`linalg`]: exact rational scalars and dense matrices (product, rank,
//!   kernel, nilpotency).
//! - [`lie`]: structure-constant Lie algebras (bracket, Jacobi, center,
//!   lower central series).
//! - [`heisenberg`]: the family `h_m ⊕ a_n` and its representations
//!   `pi_0`, `pi_{a,b}`, `pi~_{a,b}`, plus the minimal-packing selectors.
//! - [`repcheck`]: homomorphism/faithfulness/nilpotency verdicts, including
//!   the center criterion and the Engel flag construction.
//! - [`mu`]: closed-form minimal dimensions, epsilon defects, and the
//!   integer-packing oracle.
//! - [`json`], [`symbolic`]: wire formats and the block-display renderer.
//! - [`suite`], [`commands`]: the verification suites and the CLI surface.

pub mod commands;
pub mod error;
pub mod heisenberg;
pub mod json;
pub mod lie;
pub mod linalg;
pub mod mu;
pub mod random;
pub mod repcheck;
pub mod suite;
pub mod symbolic;

pub use error::Error;
