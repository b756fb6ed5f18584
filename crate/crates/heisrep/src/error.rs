use std::fmt;

/// Error type shared by every module in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Matrix operands have incompatible shapes for the requested operation.
    Shape { op: &'static str, detail: String },
    /// A coordinate vector does not match the dimension it is used against.
    Length { expected: usize, got: usize },
    /// A constructor or selector was called outside its stated domain.
    InvalidParameter(String),
    /// The center-based faithfulness criterion requires a nilpotent algebra.
    NotNilpotent,
    /// The matrices handed to an Engel-type check do not form a representation;
    /// `(i, j)` is the first basis pair whose commutator disagrees.
    NotHomomorphism { i: usize, j: usize },
    /// Malformed input string or file.
    Parse(String),
    /// The epsilon defect left {1, 2}; this would falsify a formula identity
    /// the rest of the crate reproduces, so it is surfaced loudly.
    EpsilonOutOfRange {
        m: u64,
        n: u64,
        epsilon_mu: i64,
        epsilon_mu_nil: i64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Shape { op, detail } => write!(f, "{op}: {detail}"),
            Error::Length { expected, got } => {
                write!(f, "coordinate length {got} does not match dimension {expected}")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::NotNilpotent => {
                write!(f, "precondition violated: algebra is not nilpotent")
            }
            Error::NotHomomorphism { i, j } => write!(
                f,
                "precondition violated: matrices are not a representation (first failing basis pair ({i}, {j}))"
            ),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::EpsilonOutOfRange {
                m,
                n,
                epsilon_mu,
                epsilon_mu_nil,
            } => write!(
                f,
                "epsilon defect outside {{1, 2}} at (m, n) = ({m}, {n}): epsilon_mu = {epsilon_mu}, epsilon_mu_nil = {epsilon_mu_nil}"
            ),
        }
    }
}

impl std::error::Error for Error {}
