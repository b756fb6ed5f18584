//! The Heisenberg-with-abelian-factor algebras `h_m ⊕ a_n` and their
//! representation families.
//!
//! Basis order is fixed globally as `X_1..X_m, Y_1..Y_m, Z, A_1..A_n`. The
//! packing family `pi_{a,b}` writes an element into a block matrix of shape
//! `(a, m, b)`; its scalar-shifted variant `pi~_{a,b}` sends the last abelian
//! generator to the identity. Minimal faithful members are selected by the
//! integer packing `min{a + b : ab >= k}`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::lie::{ElementCoords, LieAlgebra};
use crate::linalg::{RatMatrix, Rational};

/// Block sizes for the packing representation; both must be at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PackingParams {
    pub a: usize,
    pub b: usize,
}

impl PackingParams {
    pub fn new(a: usize, b: usize) -> Result<Self, Error> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidParameter(format!(
                "packing parameters must be positive, got a = {a}, b = {b}"
            )));
        }
        Ok(PackingParams { a, b })
    }

    pub fn sum(&self) -> usize {
        self.a + self.b
    }

    pub fn product(&self) -> usize {
        self.a * self.b
    }
}

/// An algebra together with one square matrix per basis element. The image
/// of a general element is the matching linear combination.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    algebra: LieAlgebra,
    space_dim: usize,
    matrices: Vec<RatMatrix>,
}

impl Representation {
    pub fn new(
        algebra: LieAlgebra,
        space_dim: usize,
        matrices: Vec<RatMatrix>,
    ) -> Result<Self, Error> {
        if matrices.len() != algebra.dim() {
            return Err(Error::Length {
                expected: algebra.dim(),
                got: matrices.len(),
            });
        }
        for m in &matrices {
            if m.rows() != space_dim || m.cols() != space_dim {
                return Err(Error::Shape {
                    op: "representation construction",
                    detail: format!(
                        "{}x{} basis image in a space of dimension {space_dim}",
                        m.rows(),
                        m.cols()
                    ),
                });
            }
        }
        Ok(Representation {
            algebra,
            space_dim,
            matrices,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn matrices(&self) -> &[RatMatrix] {
        &self.matrices
    }

    pub fn matrix(&self, i: usize) -> &RatMatrix {
        &self.matrices[i]
    }

    /// Image of a general algebra element: the linear combination of the
    /// basis images with the element's coordinates.
    pub fn image(&self, v: &ElementCoords) -> Result<RatMatrix, Error> {
        if v.dim() != self.algebra.dim() {
            return Err(Error::Length {
                expected: self.algebra.dim(),
                got: v.dim(),
            });
        }
        let s = self.space_dim;
        let mut entries = vec![Rational::zero(); s * s];
        for (c, m) in v.coords().iter().zip(&self.matrices) {
            if c.is_zero() {
                continue;
            }
            for (idx, e) in m.entries().iter().enumerate() {
                if !e.is_zero() {
                    entries[idx] += c * e;
                }
            }
        }
        RatMatrix::new(s, s, entries)
    }

    /// Replace one basis image (used by the randomized verification suites).
    pub fn with_matrix(mut self, i: usize, m: RatMatrix) -> Result<Self, Error> {
        if m.rows() != self.space_dim || m.cols() != self.space_dim {
            return Err(Error::Shape {
                op: "basis image replacement",
                detail: format!(
                    "{}x{} into dimension {}",
                    m.rows(),
                    m.cols(),
                    self.space_dim
                ),
            });
        }
        self.matrices[i] = m;
        Ok(self)
    }

    /// Conjugate every basis image by `t`: `M -> t^-1 M t`. Fails if `t` is
    /// singular. Faithfulness and the homomorphism property are preserved.
    pub fn conjugate(&self, t: &RatMatrix) -> Result<Self, Error> {
        let inv = t
            .inverse()
            .ok_or_else(|| Error::InvalidParameter("conjugating matrix is singular".into()))?;
        let matrices = self
            .matrices
            .iter()
            .map(|m| inv.mul(m).and_then(|im| im.mul(t)))
            .collect::<Result<Vec<_>, _>>()?;
        Representation::new(self.algebra.clone(), self.space_dim, matrices)
    }
}

/// `h_m ⊕ a_n`: dimension `2m + 1 + n`, basis `X_1..X_m, Y_1..Y_m, Z,
/// A_1..A_n`, and the `m` nonzero brackets `[X_i, Y_i] = Z`. For `m = 0`
/// this degenerates to the `(n+1)`-dimensional abelian algebra on
/// `Z, A_1..A_n`.
pub fn build_heisenberg_abelian(m: usize, n: usize) -> LieAlgebra {
    let dim = 2 * m + 1 + n;
    let mut labels = Vec::with_capacity(dim);
    for i in 1..=m {
        labels.push(format!("X_{i}"));
    }
    for i in 1..=m {
        labels.push(format!("Y_{i}"));
    }
    labels.push("Z".to_string());
    for r in 1..=n {
        labels.push(format!("A_{r}"));
    }
    let mut brackets = BTreeMap::new();
    for i in 0..m {
        let mut z = vec![Rational::zero(); dim];
        z[2 * m] = Rational::one();
        brackets.insert((i, m + i), z);
    }
    LieAlgebra::new(labels, brackets).expect("family brackets are well formed")
}

/// Index of `Z` in the canonical basis of `h_m ⊕ a_n`.
pub fn z_index(m: usize) -> usize {
    2 * m
}

/// Index of `A_r` (1-based `r`) in the canonical basis of `h_m ⊕ a_n`.
pub fn a_index(m: usize, r: usize) -> usize {
    2 * m + r
}

/// The canonical `(m+2)`-dimensional faithful representation of `h_m`:
/// `X_i -> E_{1,i+1}`, `Y_i -> E_{i+1,m+2}`, `Z -> E_{1,m+2}` (1-based
/// positions). Rejects `m = 0`, which has no `X`, `Y` generators.
pub fn canonical_pi0(m: usize) -> Result<Representation, Error> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "the canonical representation needs m >= 1".into(),
        ));
    }
    let algebra = build_heisenberg_abelian(m, 0);
    let size = m + 2;
    let mut matrices = Vec::with_capacity(algebra.dim());
    for i in 0..m {
        matrices.push(RatMatrix::unit(size, size, 0, i + 1));
    }
    for i in 0..m {
        matrices.push(RatMatrix::unit(size, size, i + 1, m + 1));
    }
    matrices.push(RatMatrix::unit(size, size, 0, m + 1));
    Representation::new(algebra, size, matrices)
}

/// `a x m` matrix with `x` as its first row and zeros below.
pub fn tau_a(a: usize, m: usize, x: &[Rational]) -> RatMatrix {
    assert!(a >= 1, "tau_a needs a >= 1");
    assert_eq!(x.len(), m, "coefficient vector must have length m");
    let mut out = RatMatrix::zero(a, m);
    for (j, v) in x.iter().enumerate() {
        if !v.is_zero() {
            out.set(0, j, v.clone());
        }
    }
    out
}

/// `m x b` matrix with `y` as its first column and zeros elsewhere.
pub fn tau_b(b: usize, m: usize, y: &[Rational]) -> RatMatrix {
    assert!(b >= 1, "tau_b needs b >= 1");
    assert_eq!(y.len(), m, "coefficient vector must have length m");
    let mut out = RatMatrix::zero(m, b);
    for (i, v) in y.iter().enumerate() {
        if !v.is_zero() {
            out.set(i, 0, v.clone());
        }
    }
    out
}

/// Row-major position of packing slot `s` inside an `a x b` block, or `None`
/// if the slot overflows the block.
fn slot_position(s: usize, a: usize, b: usize) -> Option<(usize, usize)> {
    if s < a * b {
        Some((s / b, s % b))
    } else {
        None
    }
}

/// `a x b` matrix holding `(z, a_1, .., a_n)` in row-major order. Slots past
/// the vector are zero; coefficients past the block (when `ab < n + 1`) are
/// dropped, making the map non-injective.
pub fn tau_ab(a: usize, b: usize, n: usize, z: &Rational, avec: &[Rational]) -> RatMatrix {
    assert!(a >= 1 && b >= 1, "tau_ab needs a, b >= 1");
    assert_eq!(
        avec.len(),
        n,
        "abelian coefficient vector must have length n"
    );
    let mut out = RatMatrix::zero(a, b);
    if let Some((i, j)) = slot_position(0, a, b) {
        if !z.is_zero() {
            out.set(i, j, z.clone());
        }
    }
    for (r, v) in avec.iter().enumerate() {
        if let Some((i, j)) = slot_position(r + 1, a, b) {
            if !v.is_zero() {
                out.set(i, j, v.clone());
            }
        }
    }
    out
}

/// The packing representation `pi_{a,b}` of `h_m ⊕ a_n` on a space of
/// dimension `m + a + b`, returned as per-basis-element matrices. Block
/// sizes run `(a, m, b)` along both axes: the X block sits at rows `0..a`,
/// cols `a..a+m`; the packing block at rows `0..a`, cols `a+m..a+m+b`; the
/// Y block at rows `a..a+m`, col `a+m`.
pub fn pi_ab(m: usize, n: usize, p: PackingParams) -> Result<Representation, Error> {
    let PackingParams { a, b } = PackingParams::new(p.a, p.b)?;
    let algebra = build_heisenberg_abelian(m, n);
    let size = m + a + b;
    let mut matrices = Vec::with_capacity(algebra.dim());
    for i in 0..m {
        matrices.push(RatMatrix::unit(size, size, 0, a + i));
    }
    for i in 0..m {
        matrices.push(RatMatrix::unit(size, size, a + i, a + m));
    }
    matrices.push(packing_slot_matrix(size, a, m, b, 0));
    for r in 1..=n {
        matrices.push(packing_slot_matrix(size, a, m, b, r));
    }
    Representation::new(algebra, size, matrices)
}

fn packing_slot_matrix(size: usize, a: usize, m: usize, b: usize, slot: usize) -> RatMatrix {
    match slot_position(slot, a, b) {
        Some((i, j)) => RatMatrix::unit(size, size, i, a + m + j),
        None => RatMatrix::zero(size, size),
    }
}

/// The scalar-shifted family `pi~_{a,b}` of `h_m ⊕ a_n` (`n >= 1`): the
/// abelian part is truncated to `A_1..A_{n-1}` before packing, and `A_n`
/// maps to the identity. The result is a representation but never a
/// nilrepresentation.
pub fn pi_tilde_ab(m: usize, n: usize, p: PackingParams) -> Result<Representation, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "the scalar-shifted family needs n >= 1 (no A_n to carry the scalar)".into(),
        ));
    }
    let PackingParams { a, b } = PackingParams::new(p.a, p.b)?;
    let algebra = build_heisenberg_abelian(m, n);
    let size = m + a + b;
    let mut matrices = Vec::with_capacity(algebra.dim());
    for i in 0..m {
        matrices.push(RatMatrix::unit(size, size, 0, a + i));
    }
    for i in 0..m {
        matrices.push(RatMatrix::unit(size, size, a + i, a + m));
    }
    matrices.push(packing_slot_matrix(size, a, m, b, 0));
    for r in 1..n {
        matrices.push(packing_slot_matrix(size, a, m, b, r));
    }
    matrices.push(RatMatrix::identity(size));
    Representation::new(algebra, size, matrices)
}

/// The pair `(a, b)` minimizing `a + b` subject to `ab >= k`, tie-broken by
/// the smallest `a` among minimizers with `a <= b`.
pub fn minimal_packing(k: usize) -> PackingParams {
    assert!(k >= 1, "minimal_packing needs k >= 1");
    let mut best: Option<PackingParams> = None;
    for a in 1..=k {
        let b = k.div_ceil(a);
        if a > b {
            break;
        }
        if best.is_none_or(|p| a + b < p.sum()) {
            best = Some(PackingParams { a, b });
        }
    }
    best.expect("k >= 1 always admits the packing (1, k)")
}

/// Minimal faithful nilrepresentation of `h_m ⊕ a_n`:
/// `pi_{a,b}` at the minimal packing of `n + 1`, of dimension
/// `m + ceil(2 sqrt(n + 1))`.
pub fn minimal_faithful_nilrep(m: usize, n: usize) -> Representation {
    pi_ab(m, n, minimal_packing(n + 1)).expect("minimal packing parameters are positive")
}

/// Minimal faithful representation of `h_m ⊕ a_n` for `n >= 1`:
/// `pi~_{a,b}` at the minimal packing of `n`, of dimension
/// `m + ceil(2 sqrt n)`. For `n = 0` the minimum is attained by the
/// canonical representation instead, and this constructor redirects there.
pub fn minimal_faithful_rep(m: usize, n: usize) -> Result<Representation, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "n = 0 has no scalar-shifted witness; use canonical_pi0(m)".into(),
        ));
    }
    pi_tilde_ab(m, n, minimal_packing(n))
}
