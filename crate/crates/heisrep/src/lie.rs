//! Structure-constant Lie algebras: bracket, Jacobi check, center, and
//! lower central series.
//!
//! An algebra is stored sparsely as a labeled basis plus the nonzero brackets
//! `[e_i, e_j]` for `i < j`; antisymmetry supplies the rest.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::Error;
use crate::linalg::{RatMatrix, Rational};

/// Coordinate vector of an algebra element in the canonical basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementCoords {
    coords: Vec<Rational>,
}

impl ElementCoords {
    pub fn new(coords: Vec<Rational>) -> Self {
        ElementCoords { coords }
    }

    pub fn zero(dim: usize) -> Self {
        ElementCoords {
            coords: vec![Rational::zero(); dim],
        }
    }

    /// The basis element `e_i` as a coordinate vector.
    pub fn basis_vector(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index {i} out of range for dimension {dim}");
        let mut coords = vec![Rational::zero(); dim];
        coords[i] = Rational::one();
        ElementCoords { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &ElementCoords) -> ElementCoords {
        assert_eq!(self.dim(), other.dim());
        ElementCoords {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> ElementCoords {
        ElementCoords {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    fn add_scaled_in_place(&mut self, c: &Rational, other: &[Rational]) {
        for (acc, term) in self.coords.iter_mut().zip(other) {
            if !term.is_zero() {
                *acc += c * term;
            }
        }
    }
}

/// Outcome of the Jacobi identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JacobiReport {
    Pass,
    /// First basis triple `(i, j, k)`, `i < j < k`, whose cyclic sum is
    /// nonzero, together with that sum.
    Fail {
        triple: (usize, usize, usize),
        residual: ElementCoords,
    },
}

impl JacobiReport {
    pub fn is_pass(&self) -> bool {
        matches!(self, JacobiReport::Pass)
    }
}

/// Finite-dimensional Lie algebra given by a labeled basis and structure
/// constants. Only the nonzero brackets `[e_i, e_j]`, `i < j`, are stored.
#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebra {
    dim: usize,
    basis_labels: Vec<String>,
    brackets: BTreeMap<(usize, usize), Vec<Rational>>,
}

impl LieAlgebra {
    /// Build from labels and sparse brackets. Keys must satisfy
    /// `i < j < dim` and every coefficient vector must have length `dim`.
    /// All-zero bracket values are dropped so storage stays canonical.
    pub fn new(
        basis_labels: Vec<String>,
        brackets: BTreeMap<(usize, usize), Vec<Rational>>,
    ) -> Result<Self, Error> {
        let dim = basis_labels.len();
        let mut kept = BTreeMap::new();
        for ((i, j), coeffs) in brackets {
            if i >= j || j >= dim {
                return Err(Error::InvalidParameter(format!(
                    "bracket key ({i}, {j}) must satisfy i < j < dim = {dim}"
                )));
            }
            if coeffs.len() != dim {
                return Err(Error::Length {
                    expected: dim,
                    got: coeffs.len(),
                });
            }
            if coeffs.iter().any(|c| !c.is_zero()) {
                kept.insert((i, j), coeffs);
            }
        }
        Ok(LieAlgebra {
            dim,
            basis_labels,
            brackets: kept,
        })
    }

    /// The abelian algebra on the given labels (no nonzero brackets).
    pub fn abelian(basis_labels: Vec<String>) -> Self {
        let dim = basis_labels.len();
        LieAlgebra {
            dim,
            basis_labels,
            brackets: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis_labels[i]
    }

    /// The stored nonzero brackets (`i < j` keys only).
    pub fn sparse_brackets(&self) -> &BTreeMap<(usize, usize), Vec<Rational>> {
        &self.brackets
    }

    /// `[e_i, e_j]` for arbitrary `i`, `j`, using antisymmetry.
    pub fn basis_bracket(&self, i: usize, j: usize) -> ElementCoords {
        if i == j {
            return ElementCoords::zero(self.dim);
        }
        let (key, flip) = if i < j {
            ((i, j), false)
        } else {
            ((j, i), true)
        };
        match self.brackets.get(&key) {
            None => ElementCoords::zero(self.dim),
            Some(coeffs) => {
                let coords = if flip {
                    coeffs.iter().map(|c| -c).collect()
                } else {
                    coeffs.clone()
                };
                ElementCoords::new(coords)
            }
        }
    }

    /// Bilinear antisymmetric extension of the structure constants.
    pub fn bracket(&self, x: &ElementCoords, y: &ElementCoords) -> Result<ElementCoords, Error> {
        for v in [x, y] {
            if v.dim() != self.dim {
                return Err(Error::Length {
                    expected: self.dim,
                    got: v.dim(),
                });
            }
        }
        let mut acc = ElementCoords::zero(self.dim);
        for (&(i, j), coeffs) in &self.brackets {
            // coefficient of [e_i, e_j] in [x, y] is x_i y_j - x_j y_i
            let s = x.get(i) * y.get(j) - x.get(j) * y.get(i);
            if !s.is_zero() {
                acc.add_scaled_in_place(&s, coeffs);
            }
        }
        Ok(acc)
    }

    /// Brute-force Jacobi check over all basis triples `i < j < k`.
    pub fn check_jacobi(&self) -> JacobiReport {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let ei = ElementCoords::basis_vector(self.dim, i);
                    let ej = ElementCoords::basis_vector(self.dim, j);
                    let ek = ElementCoords::basis_vector(self.dim, k);
                    let t1 = self.bracket(&self.basis_bracket(i, j), &ek).unwrap();
                    let t2 = self.bracket(&self.basis_bracket(j, k), &ei).unwrap();
                    let t3 = self.bracket(&self.basis_bracket(k, i), &ej).unwrap();
                    let sum = t1.add(&t2).add(&t3);
                    if !sum.is_zero() {
                        return JacobiReport::Fail {
                            triple: (i, j, k),
                            residual: sum,
                        };
                    }
                }
            }
        }
        JacobiReport::Pass
    }

    /// Exact basis of the center `{x : [x, e_j] = 0 for all j}`, computed by
    /// stacking the adjoint-action linear system and solving for its kernel.
    #[allow(clippy::needless_range_loop)] // i indexes columns of every block row
    pub fn center(&self) -> Subspace {
        // Block row j: the matrix of x -> [x, e_j]; column i holds [e_i, e_j].
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(self.dim * self.dim);
        for j in 0..self.dim {
            let mut block = vec![vec![Rational::zero(); self.dim]; self.dim];
            for i in 0..self.dim {
                let col = self.basis_bracket(i, j);
                for (r, val) in col.coords().iter().enumerate() {
                    if !val.is_zero() {
                        block[r][i] = val.clone();
                    }
                }
            }
            rows.extend(block);
        }
        let stacked = RatMatrix::from_rows(rows).unwrap();
        let basis = stacked
            .kernel_basis()
            .into_iter()
            .map(ElementCoords::new)
            .collect();
        Subspace::from_independent(self.dim, basis)
    }

    /// Descending series `g ⊇ [g, g] ⊇ [[g, g], g] ⊇ …`, computed until it
    /// stabilizes. If the algebra is nilpotent the final entry is the zero
    /// subspace; otherwise the series stops at the nonzero subspace it
    /// stabilizes on.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let prev = series.last().unwrap();
            if prev.dim() == 0 {
                break;
            }
            let mut generators = Vec::new();
            for i in 0..self.dim {
                let ei = ElementCoords::basis_vector(self.dim, i);
                for v in prev.basis() {
                    let w = self.bracket(&ei, v).unwrap();
                    if !w.is_zero() {
                        generators.push(w);
                    }
                }
            }
            let next = Subspace::span(self.dim, &generators);
            if next.dim() == prev.dim() {
                // Stabilized at a nonzero subspace: not nilpotent.
                break;
            }
            series.push(next);
        }
        series
    }

    /// `Some(k)` iff the lower central series reaches zero after `k`
    /// bracketing steps; `None` iff the algebra is not nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let series = self.lower_central_series();
        if series.last().unwrap().dim() == 0 {
            Some(series.len() - 1)
        } else {
            None
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class().is_some()
    }
}

/// A linear subspace of coordinate space, held as an independent basis.
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<ElementCoords>,
}

impl Subspace {
    /// Build from a basis, verifying linear independence.
    pub fn new(ambient_dim: usize, basis: Vec<ElementCoords>) -> Result<Self, Error> {
        for v in &basis {
            if v.dim() != ambient_dim {
                return Err(Error::Length {
                    expected: ambient_dim,
                    got: v.dim(),
                });
            }
        }
        let count = basis.len();
        let candidate = Subspace { ambient_dim, basis };
        if candidate.stacked().rank() != count {
            return Err(Error::InvalidParameter(
                "subspace basis vectors are linearly dependent".into(),
            ));
        }
        Ok(candidate)
    }

    /// Internal constructor for callers that already guarantee independence
    /// (e.g. kernel bases).
    pub(crate) fn from_independent(ambient_dim: usize, basis: Vec<ElementCoords>) -> Self {
        debug_assert!(basis.iter().all(|v| v.dim() == ambient_dim));
        Subspace { ambient_dim, basis }
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    /// The whole coordinate space, with the standard basis.
    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim)
                .map(|i| ElementCoords::basis_vector(ambient_dim, i))
                .collect(),
        }
    }

    /// Span of an arbitrary generating set, reduced to an echelon basis.
    pub fn span(ambient_dim: usize, generators: &[ElementCoords]) -> Self {
        if generators.is_empty() {
            return Subspace::zero(ambient_dim);
        }
        let stacked =
            RatMatrix::from_rows(generators.iter().map(|v| v.coords().to_vec()).collect()).unwrap();
        let mut rows: Vec<Vec<Rational>> = (0..stacked.rows())
            .map(|i| stacked.row_slice(i).to_vec())
            .collect();
        let pivots = rref_rows(&mut rows);
        let basis = rows
            .into_iter()
            .take(pivots)
            .map(ElementCoords::new)
            .collect();
        Subspace { ambient_dim, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ElementCoords] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Membership by a rank condition: appending `v` must not raise the rank.
    pub fn contains(&self, v: &ElementCoords) -> bool {
        if v.dim() != self.ambient_dim {
            return false;
        }
        if v.is_zero() {
            return true;
        }
        let mut rows: Vec<Vec<Rational>> = self.basis.iter().map(|b| b.coords().to_vec()).collect();
        rows.push(v.coords().to_vec());
        RatMatrix::from_rows(rows).unwrap().rank() == self.dim()
    }

    /// Subspace equality by mutual rank conditions; basis choice does not
    /// matter.
    pub fn same_span(&self, other: &Subspace) -> bool {
        if self.ambient_dim != other.ambient_dim || self.dim() != other.dim() {
            return false;
        }
        let mut rows: Vec<Vec<Rational>> = self.basis.iter().map(|b| b.coords().to_vec()).collect();
        rows.extend(other.basis.iter().map(|b| b.coords().to_vec()));
        if rows.is_empty() {
            return true;
        }
        RatMatrix::from_rows(rows).unwrap().rank() == self.dim()
    }

    fn stacked(&self) -> RatMatrix {
        RatMatrix::from_rows(self.basis.iter().map(|b| b.coords().to_vec()).collect())
            .unwrap_or_else(|_| RatMatrix::zero(0, self.ambient_dim))
    }
}

/// Row-reduce in place and return the number of pivots, leaving the pivot
/// rows (an echelon basis of the row span) first.
#[allow(clippy::needless_range_loop)] // the elimination loop touches two rows at once
fn rref_rows(rows: &mut [Vec<Rational>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let nrows = rows.len();
    let mut pivot_row = 0;
    for col in 0..ncols {
        if pivot_row >= nrows {
            break;
        }
        let Some(src) = (pivot_row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, src);
        let pivot = rows[pivot_row][col].clone();
        if !pivot.is_one() {
            for entry in rows[pivot_row][col..].iter_mut() {
                if !entry.is_zero() {
                    *entry /= &pivot;
                }
            }
        }
        for r in 0..nrows {
            if r == pivot_row || rows[r][col].is_zero() {
                continue;
            }
            let factor = std::mem::replace(&mut rows[r][col], Rational::zero());
            for c in col + 1..ncols {
                if rows[pivot_row][c].is_zero() {
                    continue;
                }
                let delta = &factor * &rows[pivot_row][c];
                rows[r][c] -= delta;
            }
        }
        pivot_row += 1;
    }
    pivot_row
}
