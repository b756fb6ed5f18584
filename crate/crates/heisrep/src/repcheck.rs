//! Representation checks: the homomorphism property, kernels and
//! faithfulness (directly and through the center criterion), and
//! simultaneous strict triangularization via the Engel construction.

use num_traits::Zero;

use crate::error::Error;
use crate::heisenberg::Representation;
use crate::lie::{ElementCoords, Subspace};
use crate::linalg::{RatMatrix, Rational};

/// Outcome of the basis-pairwise homomorphism check.
#[derive(Debug, Clone, PartialEq)]
pub enum HomReport {
    Pass,
    /// First basis pair `(i, j)`, `i < j`, where the commutator of the
    /// images differs from the image of the bracket, with the difference.
    Fail {
        i: usize,
        j: usize,
        residual: RatMatrix,
    },
}

impl HomReport {
    pub fn is_pass(&self) -> bool {
        matches!(self, HomReport::Pass)
    }
}

/// Check `[M_i, M_j] = sum_k c_ij^k M_k` exactly for every basis pair
/// `i < j`. By bilinearity this settles the property for all elements.
pub fn is_homomorphism(rep: &Representation) -> HomReport {
    let dim = rep.algebra().dim();
    for i in 0..dim {
        for j in i + 1..dim {
            let lhs = rep
                .matrix(i)
                .commutator(rep.matrix(j))
                .expect("basis images are square of equal size");
            let expected = rep
                .image(&rep.algebra().basis_bracket(i, j))
                .expect("bracket coordinates match the algebra dimension");
            let residual = lhs.sub(&expected).expect("shapes agree");
            if !residual.is_zero() {
                return HomReport::Fail { i, j, residual };
            }
        }
    }
    HomReport::Pass
}

/// Matrix whose `i`-th column is the vectorized image of basis element `i`.
/// Its kernel is the representation kernel; its rank is the rank of the
/// image map.
fn vectorized_image_matrix(rep: &Representation) -> RatMatrix {
    let s = rep.space_dim();
    let dim = rep.algebra().dim();
    let mut out = RatMatrix::zero(s * s, dim);
    for (col, m) in rep.matrices().iter().enumerate() {
        for (row, entry) in m.entries().iter().enumerate() {
            if !entry.is_zero() {
                out.set(row, col, entry.clone());
            }
        }
    }
    out
}

/// Exact kernel of the representation as a subspace of the algebra: the
/// solution space of `sum_i c_i M_i = 0`.
pub fn rep_kernel(rep: &Representation) -> Subspace {
    let basis = vectorized_image_matrix(rep)
        .kernel_basis()
        .into_iter()
        .map(ElementCoords::new)
        .collect();
    Subspace::from_independent(rep.algebra().dim(), basis)
}

/// True iff the representation kernel is zero.
pub fn is_faithful(rep: &Representation) -> bool {
    vectorized_image_matrix(rep).rank() == rep.algebra().dim()
}

/// Center criterion for faithfulness: a representation of a *nilpotent*
/// algebra is faithful iff its restriction to the center is. Refuses
/// non-nilpotent algebras, where the equivalence fails.
pub fn is_faithful_via_center(rep: &Representation) -> Result<bool, Error> {
    if !rep.algebra().is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let center = rep.algebra().center();
    let s = rep.space_dim();
    let mut stacked = RatMatrix::zero(s * s, center.dim());
    for (col, v) in center.basis().iter().enumerate() {
        let image = rep.image(v).expect("center vectors match the algebra");
        for (row, entry) in image.entries().iter().enumerate() {
            if !entry.is_zero() {
                stacked.set(row, col, entry.clone());
            }
        }
    }
    Ok(stacked.rank() == center.dim())
}

/// Outcome of the Engel flag construction.
#[derive(Debug, Clone, PartialEq)]
pub enum EngelOutcome {
    /// An ordered basis of the space in which every basis image is strictly
    /// upper triangular, together with the number of kernel-extraction
    /// rounds it took.
    Success {
        basis: Vec<Vec<Rational>>,
        stages: usize,
    },
    /// The construction stalled: at this 0-based stage the common kernel of
    /// the induced operators on the quotient was zero.
    Failure { stage: usize },
}

impl EngelOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self, EngelOutcome::Success { .. })
    }
}

/// Engel construction: repeatedly extract the common kernel of the basis
/// images on the current quotient and extend a flag with it. Succeeds with
/// an ordered basis exactly when every image is nilpotent (the image spans a
/// Lie algebra of operators, so the common kernel of the basis images is the
/// common kernel of the span). Requires a representation; the homomorphism
/// precondition is enforced.
pub fn engel_flag(rep: &Representation) -> Result<EngelOutcome, Error> {
    if let HomReport::Fail { i, j, .. } = is_homomorphism(rep) {
        return Err(Error::NotHomomorphism { i, j });
    }
    let s = rep.space_dim();
    // flag holds an independent basis of V_t, ordered so each round's
    // vectors extend the previous round's.
    let mut flag: Vec<Vec<Rational>> = Vec::new();
    let mut stage = 0;
    loop {
        if flag.len() == s {
            return Ok(EngelOutcome::Success {
                basis: flag,
                stages: stage,
            });
        }
        // Annihilator rows q with q . v = 0 for every v in the flag; the
        // current subspace is exactly {x : q . x = 0 for all q}.
        let q_rows: Vec<Vec<Rational>> = if flag.is_empty() {
            (0..s)
                .map(|i| {
                    let mut row = vec![Rational::zero(); s];
                    row[i] = crate::linalg::rat_int(1);
                    row
                })
                .collect()
        } else {
            RatMatrix::from_rows(flag.clone())
                .expect("flag rows share the space dimension")
                .kernel_basis()
        };
        // V_{t+1} = {v : M_i v in V_t for all i} = kernel of the stacked
        // rows (q M_i).
        let mut stacked_rows = Vec::new();
        for m in rep.matrices() {
            for q in &q_rows {
                let mut row = vec![Rational::zero(); s];
                for (k, qk) in q.iter().enumerate() {
                    if qk.is_zero() {
                        continue;
                    }
                    for (j, cell) in row.iter_mut().enumerate() {
                        let mkj = m.get(k, j);
                        if !mkj.is_zero() {
                            *cell += qk * mkj;
                        }
                    }
                }
                stacked_rows.push(row);
            }
        }
        let next_basis = if stacked_rows.is_empty() {
            // No constraints: the next space is everything.
            (0..s)
                .map(|i| {
                    let mut row = vec![Rational::zero(); s];
                    row[i] = crate::linalg::rat_int(1);
                    row
                })
                .collect()
        } else {
            RatMatrix::from_rows(stacked_rows)
                .expect("stacked rows share the space dimension")
                .kernel_basis()
        };
        if next_basis.len() == flag.len() {
            return Ok(EngelOutcome::Failure { stage });
        }
        // Extend the flag by the new vectors that are independent of it.
        let mut extended = flag.clone();
        for v in next_basis {
            let mut probe = extended.clone();
            probe.push(v.clone());
            let rank = RatMatrix::from_rows(probe.clone())
                .expect("rows share the space dimension")
                .rank();
            if rank == probe.len() {
                extended = probe;
            }
        }
        flag = extended;
        stage += 1;
    }
}

/// True iff the Engel construction succeeds, i.e. the representation image
/// consists of nilpotent operators.
pub fn is_nilrepresentation(rep: &Representation) -> Result<bool, Error> {
    Ok(engel_flag(rep)?.is_success())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heisenberg::{
        a_index, build_heisenberg_abelian, canonical_pi0, pi_ab, pi_tilde_ab, PackingParams,
    };
    use crate::lie::LieAlgebra;
    use crate::linalg::{rat_int, RatMatrix};
    use std::collections::BTreeMap;

    fn zero_rep(m: usize, n: usize, size: usize) -> Representation {
        let alg = build_heisenberg_abelian(m, n);
        let dim = alg.dim();
        Representation::new(alg, size, vec![RatMatrix::zero(size, size); dim]).unwrap()
    }

    #[test]
    fn pi_ab_is_a_homomorphism() {
        let rep = pi_ab(2, 4, PackingParams { a: 2, b: 3 }).unwrap();
        assert!(is_homomorphism(&rep).is_pass());
    }

    #[test]
    fn zero_representation_is_a_homomorphism() {
        assert!(is_homomorphism(&zero_rep(2, 1, 3)).is_pass());
    }

    #[test]
    fn tampered_pi0_fails_at_the_generator_pair() {
        let rep = canonical_pi0(1).unwrap();
        let doubled = rep.matrix(2).scale(&rat_int(2));
        let bad = rep.with_matrix(2, doubled).unwrap();
        match is_homomorphism(&bad) {
            HomReport::Fail { i, j, residual } => {
                assert_eq!((i, j), (0, 1));
                assert_eq!(residual, RatMatrix::unit(3, 3, 0, 2).neg());
            }
            HomReport::Pass => panic!("tampered representation must fail"),
        }
    }

    #[test]
    fn kernel_of_underpacked_family() {
        // ab = 3 < 5 = n + 1 drops a_3 and a_4.
        let rep = pi_ab(2, 4, PackingParams { a: 1, b: 3 }).unwrap();
        let kernel = rep_kernel(&rep);
        assert_eq!(kernel.dim(), 2);
        let expected = Subspace::new(
            9,
            vec![
                ElementCoords::basis_vector(9, a_index(2, 3)),
                ElementCoords::basis_vector(9, a_index(2, 4)),
            ],
        )
        .unwrap();
        assert!(kernel.same_span(&expected));
        assert!(!is_faithful(&rep));
    }

    #[test]
    fn canonical_representation_is_faithful() {
        for m in 1..4 {
            let rep = canonical_pi0(m).unwrap();
            assert!(rep_kernel(&rep).is_zero());
            assert!(is_faithful(&rep));
        }
    }

    #[test]
    fn zero_representation_kernel_is_everything() {
        let rep = zero_rep(0, 3, 2);
        assert_eq!(rep_kernel(&rep).dim(), 4);
        assert!(!is_faithful(&rep));
    }

    #[test]
    fn one_dimensional_scalar_is_faithful() {
        let alg = LieAlgebra::abelian(vec!["A_1".into()]);
        let rep = Representation::new(alg, 1, vec![RatMatrix::identity(1)]).unwrap();
        assert!(is_faithful(&rep));
        // ... and is not a nilrepresentation: the common kernel is zero.
        assert_eq!(
            engel_flag(&rep).unwrap(),
            EngelOutcome::Failure { stage: 0 }
        );
        assert!(!is_nilrepresentation(&rep).unwrap());
    }

    #[test]
    fn center_criterion_matches_direct_check_on_family() {
        for (a, b) in [(1, 3), (2, 3), (2, 2), (1, 5)] {
            let rep = pi_ab(2, 4, PackingParams { a, b }).unwrap();
            assert_eq!(
                is_faithful(&rep),
                is_faithful_via_center(&rep).unwrap(),
                "(a, b) = ({a}, {b})"
            );
        }
        let rep = pi_ab(2, 4, PackingParams { a: 2, b: 3 }).unwrap();
        assert!(is_faithful_via_center(&rep).unwrap());
        let rep = pi_ab(2, 4, PackingParams { a: 1, b: 3 }).unwrap();
        assert!(!is_faithful_via_center(&rep).unwrap());
    }

    #[test]
    fn center_criterion_rejects_non_nilpotent_algebras() {
        let mut brackets = BTreeMap::new();
        brackets.insert((0, 1), vec![rat_int(0), rat_int(1)]);
        let alg = LieAlgebra::new(vec!["e_1".into(), "e_2".into()], brackets).unwrap();
        let rep = Representation::new(alg, 2, vec![RatMatrix::zero(2, 2); 2]).unwrap();
        assert_eq!(is_faithful_via_center(&rep), Err(Error::NotNilpotent));
    }

    #[test]
    fn zero_representation_of_heisenberg_fails_center_criterion() {
        let rep = zero_rep(1, 0, 3);
        assert!(!is_faithful_via_center(&rep).unwrap());
    }

    #[test]
    fn engel_succeeds_on_pi0_with_strictly_upper_triangular_result() {
        let rep = canonical_pi0(2).unwrap();
        let EngelOutcome::Success { basis, stages } = engel_flag(&rep).unwrap() else {
            panic!("pi0 triangularizes");
        };
        assert!(stages <= 3);
        assert_strictly_upper_in_basis(&rep, &basis);
    }

    #[test]
    fn engel_succeeds_on_packed_family_within_three_stages() {
        let rep = pi_ab(2, 4, PackingParams { a: 2, b: 3 }).unwrap();
        let EngelOutcome::Success { basis, stages } = engel_flag(&rep).unwrap() else {
            panic!("pi_ab triangularizes");
        };
        assert!(stages <= 3, "took {stages} stages");
        assert_strictly_upper_in_basis(&rep, &basis);
    }

    #[test]
    fn engel_climbs_a_jordan_block_one_stage_at_a_time() {
        // A single nilpotent Jordan block representing the 1-dimensional
        // abelian algebra: each round grows the flag by exactly one vector.
        let alg = LieAlgebra::abelian(vec!["A_1".into()]);
        let mut jordan = RatMatrix::zero(4, 4);
        for i in 0..3 {
            jordan.set(i, i + 1, rat_int(1));
        }
        let rep = Representation::new(alg, 4, vec![jordan]).unwrap();
        let EngelOutcome::Success { basis, stages } = engel_flag(&rep).unwrap() else {
            panic!("a nilpotent Jordan block triangularizes");
        };
        assert_eq!(stages, 4);
        assert_strictly_upper_in_basis(&rep, &basis);
    }

    #[test]
    fn engel_rejects_non_homomorphisms() {
        let rep = canonical_pi0(1).unwrap();
        let doubled = rep.matrix(2).scale(&rat_int(2));
        let bad = rep.with_matrix(2, doubled).unwrap();
        assert_eq!(engel_flag(&bad), Err(Error::NotHomomorphism { i: 0, j: 1 }));
    }

    #[test]
    fn scalar_shifted_family_is_not_a_nilrepresentation() {
        let rep = pi_tilde_ab(1, 1, PackingParams { a: 1, b: 1 }).unwrap();
        assert!(is_homomorphism(&rep).is_pass());
        assert!(is_faithful(&rep));
        assert!(!is_nilrepresentation(&rep).unwrap());
    }

    #[test]
    fn zero_representation_is_a_nilrepresentation() {
        assert!(is_nilrepresentation(&zero_rep(1, 2, 4)).unwrap());
    }

    #[test]
    fn kernel_dimension_plus_image_rank_is_algebra_dimension() {
        for (a, b) in [(1, 1), (1, 4), (2, 2), (3, 2)] {
            let rep = pi_ab(1, 3, PackingParams { a, b }).unwrap();
            let rank = vectorized_image_matrix(&rep).rank();
            assert_eq!(rep_kernel(&rep).dim() + rank, rep.algebra().dim());
        }
    }

    fn assert_strictly_upper_in_basis(rep: &Representation, basis: &[Vec<Rational>]) {
        let s = rep.space_dim();
        assert_eq!(basis.len(), s);
        let t = {
            // Basis vectors as columns.
            let mut t = RatMatrix::zero(s, s);
            for (j, v) in basis.iter().enumerate() {
                for (i, e) in v.iter().enumerate() {
                    t.set(i, j, e.clone());
                }
            }
            t
        };
        let t_inv = t.inverse().expect("flag basis is invertible");
        for m in rep.matrices() {
            let conj = t_inv.mul(m).unwrap().mul(&t).unwrap();
            for i in 0..s {
                for j in 0..=i {
                    assert!(
                        conj.get(i, j).is_zero(),
                        "entry ({i}, {j}) nonzero after change of basis"
                    );
                }
            }
        }
    }
}
