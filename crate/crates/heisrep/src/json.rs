//! JSON wire formats: algebras, representations, and check reports.
//!
//! Rationals travel as strings (`"p"` or `"p/q"`); indices are 0-based and
//! bracket keys carry `i < j` only. Emitted files are canonical, so a
//! construct -> serialize -> parse round trip is bit-exact.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::heisenberg::Representation;
use crate::lie::LieAlgebra;
use crate::linalg::{format_rational, parse_rational, RatMatrix, Rational};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    /// Nonzero coefficients of `[e_i, e_j]`, keyed by basis index.
    pub coeffs: BTreeMap<usize, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepresentationJson {
    pub algebra: AlgebraJson,
    pub space_dim: usize,
    /// One `space_dim x space_dim` matrix per basis element, in basis order.
    pub matrices: Vec<Vec<Vec<String>>>,
}

pub fn algebra_to_json(alg: &LieAlgebra) -> AlgebraJson {
    let brackets = alg
        .sparse_brackets()
        .iter()
        .map(|(&(i, j), coeffs)| BracketJson {
            i,
            j,
            coeffs: coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k, format_rational(c)))
                .collect(),
        })
        .collect();
    AlgebraJson {
        dim: alg.dim(),
        basis: alg.basis_labels().to_vec(),
        brackets,
    }
}

pub fn algebra_from_json(json: &AlgebraJson) -> Result<LieAlgebra, Error> {
    if json.basis.len() != json.dim {
        return Err(Error::Parse(format!(
            "dim is {} but {} basis labels are given",
            json.dim,
            json.basis.len()
        )));
    }
    let mut brackets = BTreeMap::new();
    for entry in &json.brackets {
        if entry.i >= entry.j || entry.j >= json.dim {
            return Err(Error::Parse(format!(
                "bracket key ({}, {}) must satisfy i < j < dim = {}",
                entry.i, entry.j, json.dim
            )));
        }
        let mut coeffs = vec![Rational::zero(); json.dim];
        for (&k, s) in &entry.coeffs {
            if k >= json.dim {
                return Err(Error::Parse(format!(
                    "coefficient index {k} out of range for dim {}",
                    json.dim
                )));
            }
            coeffs[k] = parse_rational(s)?;
        }
        if brackets.insert((entry.i, entry.j), coeffs).is_some() {
            return Err(Error::Parse(format!(
                "duplicate bracket key ({}, {})",
                entry.i, entry.j
            )));
        }
    }
    LieAlgebra::new(json.basis.clone(), brackets)
        .map_err(|e| Error::Parse(format!("invalid algebra: {e}")))
}

pub fn matrix_to_strings(m: &RatMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row_slice(i).iter().map(format_rational).collect())
        .collect()
}

pub fn matrix_from_strings(rows: &[Vec<String>]) -> Result<RatMatrix, Error> {
    let parsed: Result<Vec<Vec<Rational>>, Error> = rows
        .iter()
        .map(|row| row.iter().map(|s| parse_rational(s)).collect())
        .collect();
    RatMatrix::from_rows(parsed?).map_err(|e| Error::Parse(format!("ragged matrix: {e}")))
}

pub fn representation_to_json(rep: &Representation) -> RepresentationJson {
    RepresentationJson {
        algebra: algebra_to_json(rep.algebra()),
        space_dim: rep.space_dim(),
        matrices: rep.matrices().iter().map(matrix_to_strings).collect(),
    }
}

pub fn representation_from_json(json: &RepresentationJson) -> Result<Representation, Error> {
    let algebra = algebra_from_json(&json.algebra)?;
    if json.matrices.len() != algebra.dim() {
        return Err(Error::Parse(format!(
            "{} matrices for an algebra of dimension {}",
            json.matrices.len(),
            algebra.dim()
        )));
    }
    let mut matrices = Vec::with_capacity(json.matrices.len());
    for (idx, rows) in json.matrices.iter().enumerate() {
        let m = matrix_from_strings(rows)?;
        if m.rows() != json.space_dim || m.cols() != json.space_dim {
            return Err(Error::Parse(format!(
                "matrix {idx} is {}x{}, expected {}x{}",
                m.rows(),
                m.cols(),
                json.space_dim,
                json.space_dim
            )));
        }
        matrices.push(m);
    }
    Representation::new(algebra, json.space_dim, matrices)
        .map_err(|e| Error::Parse(format!("invalid representation: {e}")))
}

/// Parse an algebra from its JSON text.
pub fn parse_algebra(text: &str) -> Result<LieAlgebra, Error> {
    let json: AlgebraJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    algebra_from_json(&json)
}

/// Parse a representation from its JSON text.
pub fn parse_representation(text: &str) -> Result<Representation, Error> {
    let json: RepresentationJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    representation_from_json(&json)
}

pub fn algebra_to_string(alg: &LieAlgebra) -> String {
    serde_json::to_string_pretty(&algebra_to_json(alg)).expect("algebra serializes")
}

pub fn representation_to_string(rep: &Representation) -> String {
    serde_json::to_string_pretty(&representation_to_json(rep)).expect("representation serializes")
}

/// One entry of a verification report. Serialized as
/// `{ "check": name, "pass": bool, "witness": ... }` with the witness
/// omitted when there is nothing to attach.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

impl CheckReport {
    pub fn pass(check: &str) -> Self {
        CheckReport {
            check: check.to_string(),
            pass: true,
            witness: None,
        }
    }

    pub fn fail(check: &str, witness: serde_json::Value) -> Self {
        CheckReport {
            check: check.to_string(),
            pass: false,
            witness: Some(witness),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heisenberg::{build_heisenberg_abelian, pi_ab, PackingParams};

    #[test]
    fn algebra_round_trip() {
        let alg = build_heisenberg_abelian(2, 3);
        let text = algebra_to_string(&alg);
        let back = parse_algebra(&text).unwrap();
        assert_eq!(alg, back);
    }

    #[test]
    fn algebra_schema_is_pinned() {
        let alg = build_heisenberg_abelian(1, 1);
        let json = serde_json::to_value(algebra_to_json(&alg)).unwrap();
        let expected = serde_json::json!({
            "dim": 4,
            "basis": ["X_1", "Y_1", "Z", "A_1"],
            "brackets": [ { "i": 0, "j": 1, "coeffs": { "2": "1" } } ]
        });
        assert_eq!(json, expected);
    }

    #[test]
    fn representation_round_trip_is_bit_exact() {
        let rep = pi_ab(2, 4, PackingParams { a: 2, b: 3 }).unwrap();
        let text = representation_to_string(&rep);
        let back = parse_representation(&text).unwrap();
        assert_eq!(rep, back);
        assert_eq!(representation_to_string(&back), text);
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        assert!(parse_algebra("{").is_err());
        assert!(parse_algebra("{\"dim\": 2, \"basis\": [\"a\"], \"brackets\": []}").is_err());
        // i >= j
        assert!(parse_algebra(
            "{\"dim\": 2, \"basis\": [\"a\",\"b\"], \"brackets\": [{\"i\":1,\"j\":1,\"coeffs\":{}}]}"
        )
        .is_err());
        // coefficient index out of range
        assert!(parse_algebra(
            "{\"dim\": 2, \"basis\": [\"a\",\"b\"], \"brackets\": [{\"i\":0,\"j\":1,\"coeffs\":{\"5\":\"1\"}}]}"
        )
        .is_err());
        // bad rational
        assert!(parse_algebra(
            "{\"dim\": 2, \"basis\": [\"a\",\"b\"], \"brackets\": [{\"i\":0,\"j\":1,\"coeffs\":{\"0\":\"1/0\"}}]}"
        )
        .is_err());
        let rep = pi_ab(1, 0, PackingParams { a: 1, b: 1 }).unwrap();
        let text = representation_to_string(&rep);
        assert!(parse_representation(&text[..text.len() / 2]).is_err());
    }

    #[test]
    fn wrong_matrix_shape_is_rejected() {
        let rep = pi_ab(1, 0, PackingParams { a: 1, b: 1 }).unwrap();
        let mut json = representation_to_json(&rep);
        json.matrices[0].pop();
        let text = serde_json::to_string(&json).unwrap();
        assert!(parse_representation(&text).is_err());
        let mut json = representation_to_json(&rep);
        json.matrices.pop();
        let text = serde_json::to_string(&json).unwrap();
        assert!(parse_representation(&text).is_err());
    }

    #[test]
    fn check_report_serialization() {
        let report = vec![
            CheckReport::pass("hom"),
            CheckReport::fail("nil", serde_json::json!({ "stage": 0 })),
        ];
        let text = serde_json::to_string(&report).unwrap();
        assert_eq!(
            text,
            "[{\"check\":\"hom\",\"pass\":true},{\"check\":\"nil\",\"pass\":false,\"witness\":{\"stage\":0}}]"
        );
    }
}
