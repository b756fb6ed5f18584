//! Exact rational scalars and dense matrices.
//!
//! Every operation here is exact: entries are arbitrary-precision rationals
//! kept in canonical form (positive denominator, fully reduced), so rank,
//! kernel and nilpotency decisions are yes/no facts rather than tolerance
//! calls. No floating point is used anywhere in this crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational scalar, always reduced with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// `p/q` from machine integers. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// The integer `p` as a rational.
pub fn rat_int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Parse the wire form of a rational: `"p"` for integers, `"p/q"` otherwise.
/// The result is canonicalized; a zero denominator is rejected.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    s.parse::<Rational>()
        .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

/// Wire form of a rational: `"p"` if integral, `"p/q"` with q > 0 otherwise.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// True iff `r` is stored in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) = 1. The arithmetic backend maintains this
/// on every path; tests audit it on operation outputs.
pub fn is_canonical(r: &Rational) -> bool {
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    /// Build from a row-major entry list; the length must be `rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::Shape {
                op: "matrix construction",
                detail: format!("{} entries for a {rows}x{cols} matrix", entries.len()),
            });
        }
        Ok(RatMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// The elementary matrix with a single 1 at `(i, j)`.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = RatMatrix::zero(rows, cols);
        m.set(i, j, Rational::one());
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape {
                op: "matrix construction",
                detail: "rows of unequal length".into(),
            });
        }
        Ok(RatMatrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row_slice(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix, Error> {
        self.check_same_shape("matrix addition", other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, other: &RatMatrix) -> Result<RatMatrix, Error> {
        self.check_same_shape("matrix subtraction", other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn neg(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> RatMatrix {
        if c.is_zero() {
            return RatMatrix::zero(self.rows, self.cols);
        }
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|a| if a.is_zero() { Rational::zero() } else { a * c })
                .collect(),
        }
    }

    /// Exact matrix product. The inner loops skip zero entries, which makes
    /// products of the sparse basis images used elsewhere in this crate cheap.
    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, Error> {
        if self.cols != other.rows {
            return Err(Error::Shape {
                op: "matrix product",
                detail: format!(
                    "{}x{} times {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let bkj = other.get(k, j);
                    if bkj.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.entries[idx] += aik * bkj;
                }
            }
        }
        Ok(out)
    }

    /// `AB - BA`, exactly. Both matrices must be square of the same size.
    pub fn commutator(&self, other: &RatMatrix) -> Result<RatMatrix, Error> {
        if !self.is_square() || self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape {
                op: "commutator",
                detail: format!(
                    "{}x{} with {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        let ab = self.mul(other)?;
        let ba = other.mul(self)?;
        ab.sub(&ba)
    }

    /// Exact rank via reduced row echelon form.
    pub fn rank(&self) -> usize {
        let mut rows = self.to_row_vecs();
        rref_in_place(&mut rows).len()
    }

    /// Exact basis of the right null space `{v : Av = 0}`.
    ///
    /// The reduced echelon form determines the free columns in increasing
    /// index order; one basis vector is emitted per free column, in that
    /// order, with a 1 in the free coordinate. Returns an empty list iff the
    /// matrix has full column rank.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let n = self.cols;
        let mut rows = self.to_row_vecs();
        let pivot_cols = rref_in_place(&mut rows);
        let is_pivot = {
            let mut mask = vec![false; n];
            for &c in &pivot_cols {
                mask[c] = true;
            }
            mask
        };
        let mut basis = Vec::with_capacity(n - pivot_cols.len());
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); n];
            v[free] = Rational::one();
            for (row_idx, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -rows[row_idx][free].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Exact inverse, or `None` if the matrix is singular or non-square.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        // Gauss-Jordan on [A | I].
        let mut rows: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut r = self.row_slice(i).to_vec();
                r.extend((0..n).map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                }));
                r
            })
            .collect();
        let pivots = rref_in_place(&mut rows);
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let entries = rows.into_iter().flat_map(|r| r[n..].to_vec()).collect();
        Some(RatMatrix {
            rows: n,
            cols: n,
            entries,
        })
    }

    /// True iff `A^d = 0` where `d` is the matrix size. Errors on
    /// non-square input.
    pub fn is_nilpotent(&self) -> Result<bool, Error> {
        if !self.is_square() {
            return Err(Error::Shape {
                op: "nilpotency test",
                detail: format!("{}x{} is not square", self.rows, self.cols),
            });
        }
        let d = self.rows;
        if d == 0 || self.is_zero() {
            return Ok(true);
        }
        // Repeated squaring: A^d = 0 iff A^(2^k) = 0 for the first 2^k >= d.
        let mut power = self.clone();
        let mut exponent = 1usize;
        while exponent < d {
            power = power.mul(&power)?;
            if power.is_zero() {
                return Ok(true);
            }
            exponent *= 2;
        }
        Ok(power.is_zero())
    }

    fn check_same_shape(&self, op: &'static str, other: &RatMatrix) -> Result<(), Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape {
                op,
                detail: format!(
                    "{}x{} with {}x{}",
                    self.rows, self.cols, other.rows, other.cols
                ),
            });
        }
        Ok(())
    }

    fn to_row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row_slice(i).to_vec()).collect()
    }
}

/// Reduce `rows` to reduced row echelon form in place and return the pivot
/// columns in increasing order. Exact arithmetic, first-nonzero pivoting.
#[allow(clippy::needless_range_loop)] // the elimination loop touches two rows at once
fn rref_in_place(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivot_cols = Vec::new();
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
        pivot_cols.push(col);
        pivot_row += 1;
    }
    pivot_cols
}
