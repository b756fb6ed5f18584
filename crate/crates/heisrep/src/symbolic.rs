//! Symbolic entry-placement matrices: where each coefficient of a general
//! element lands in the block displays, rendered as aligned text or LaTeX.
//!
//! Golden tests compare these placement maps position for position, so the
//! grid itself (not the rendering) is the contract.

use crate::error::Error;
use crate::heisenberg::PackingParams;

/// A grid of entry labels: `"0"` for a structurally zero cell, otherwise a
/// coefficient name such as `x_1`, `y_2`, `z`, or `a_10`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<String>,
}

impl SymbolicMatrix {
    fn zero(rows: usize, cols: usize) -> Self {
        SymbolicMatrix {
            rows,
            cols,
            entries: vec!["0".to_string(); rows * cols],
        }
    }

    fn set(&mut self, i: usize, j: usize, label: impl Into<String>) {
        self.entries[i * self.cols + j] = label.into();
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &str {
        &self.entries[i * self.cols + j]
    }

    /// The labels of row `i`, left to right.
    pub fn row_tokens(&self, i: usize) -> Vec<&str> {
        (0..self.cols).map(|j| self.entry(i, j)).collect()
    }

    /// A sub-block, for comparing against partial displays.
    pub fn block(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> SymbolicMatrix {
        let mut out = SymbolicMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.set(i, j, self.entry(row0 + i, col0 + j));
            }
        }
        out
    }

    /// Column-aligned plain text, one row per line.
    pub fn render_text(&self) -> String {
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .map(|i| self.entry(i, j).len())
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let mut out = String::new();
        for i in 0..self.rows {
            let mut line = String::new();
            for (j, width) in widths.iter().enumerate() {
                if j > 0 {
                    line.push_str("  ");
                }
                let cell = self.entry(i, j);
                line.push_str(cell);
                line.push_str(&" ".repeat(width - cell.len()));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    /// A `pmatrix` with `label_index` turned into `label_{index}`.
    pub fn render_latex(&self) -> String {
        let mut out = String::from("\\begin{pmatrix}\n");
        for i in 0..self.rows {
            let cells: Vec<String> = (0..self.cols)
                .map(|j| latex_label(self.entry(i, j)))
                .collect();
            out.push_str(&cells.join(" & "));
            if i + 1 < self.rows {
                out.push_str(" \\\\");
            }
            out.push('\n');
        }
        out.push_str("\\end{pmatrix}\n");
        out
    }
}

fn latex_label(label: &str) -> String {
    match label.split_once('_') {
        Some((head, sub)) => format!("{head}_{{{sub}}}"),
        None => label.to_string(),
    }
}

fn slot_position(s: usize, a: usize, b: usize) -> Option<(usize, usize)> {
    if s < a * b {
        Some((s / b, s % b))
    } else {
        None
    }
}

/// Placement map of the packing block alone: `(z, a_1..a_n)` written
/// row-major into an `a x b` grid.
pub fn tau_ab_pattern(a: usize, b: usize, n: usize) -> SymbolicMatrix {
    let mut out = SymbolicMatrix::zero(a, b);
    if let Some((i, j)) = slot_position(0, a, b) {
        out.set(i, j, "z");
    }
    for r in 1..=n {
        if let Some((i, j)) = slot_position(r, a, b) {
            out.set(i, j, format!("a_{r}"));
        }
    }
    out
}

/// Placement map of the canonical representation of `h_m`: first row
/// `(0, x_1..x_m, z)`, last column `(z, y_1..y_m, 0)`.
pub fn pi0_pattern(m: usize) -> Result<SymbolicMatrix, Error> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "the canonical representation needs m >= 1".into(),
        ));
    }
    let size = m + 2;
    let mut out = SymbolicMatrix::zero(size, size);
    for i in 1..=m {
        out.set(0, i, format!("x_{i}"));
        out.set(i, m + 1, format!("y_{i}"));
    }
    out.set(0, m + 1, "z");
    Ok(out)
}

/// Placement map of `pi_{a,b}` on `h_m ⊕ a_n`: blocks `(a, m, b)`, the X
/// coefficients along the first row of the middle block, the Y coefficients
/// down the first packing column, and `(z, a_1..a_n)` packed row-major.
pub fn pi_ab_pattern(m: usize, n: usize, p: PackingParams) -> Result<SymbolicMatrix, Error> {
    let PackingParams { a, b } = PackingParams::new(p.a, p.b)?;
    let size = m + a + b;
    let mut out = SymbolicMatrix::zero(size, size);
    for i in 1..=m {
        out.set(0, a + i - 1, format!("x_{i}"));
        out.set(a + i - 1, a + m, format!("y_{i}"));
    }
    if let Some((i, j)) = slot_position(0, a, b) {
        out.set(i, a + m + j, "z");
    }
    for r in 1..=n {
        if let Some((i, j)) = slot_position(r, a, b) {
            out.set(i, a + m + j, format!("a_{r}"));
        }
    }
    Ok(out)
}

/// Placement map of the scalar-shifted family: the `pi_{a,b}` pattern on the
/// truncated abelian part, plus `a_n` down the whole diagonal.
pub fn pi_tilde_pattern(m: usize, n: usize, p: PackingParams) -> Result<SymbolicMatrix, Error> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "the scalar-shifted family needs n >= 1".into(),
        ));
    }
    let mut out = pi_ab_pattern(m, n - 1, p)?;
    let scalar = format!("a_{n}");
    for i in 0..out.rows() {
        debug_assert_eq!(out.entry(i, i), "0", "diagonal cell already occupied");
        out.set(i, i, scalar.clone());
    }
    Ok(out)
}
