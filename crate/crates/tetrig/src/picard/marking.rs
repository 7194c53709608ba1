//! The marking of the conic-bundle surface: an explicit isometry from the
//! orthogonal complement of the fiber class, modulo the fiber class itself,
//! onto the E₈ root lattice (with its negative-definite pairing).
//!
//! A marking is presented as eight pairs — a divisor class and a lattice
//! root — whose intersection numbers realize the E₈ Dynkin diagram on both
//! sides.  Since the common Gram matrix is unimodular, pairing any class
//! against the eight divisor classes determines integer coordinates in the
//! root basis, which is how [`MarkingIso::project`] evaluates the isometry.
//!
//! Two markings are built here: the *incidence marking* assembled from
//! exceptional curves and reducible-fiber data ([`incidence_marking`]), and
//! the *chain marking* assembled from a conic-bundle section chain
//! ([`chain_marking`]).  They agree on fiber-component classes but
//! differ by a nontrivial lattice isometry fixing `e_∅` and `e_1234` — a
//! Weyl twist of the middle `D₆` — so projections of general classes
//! depend on which marking is in force.

use serde::Serialize;

use crate::e8lattice::{AffPoint, LatticeVec};
use crate::error::{Error, Result};

use super::classes::{fiber_component_classes, pic_pairing, PicClass};
use super::exact;
use super::identities::BAssignment;

/// The eight roots forming the lattice side of both markings, in diagram
/// order: a chain `0–1–2–4–5–6–7` with the leaf `3` hanging off node `2`.
pub(crate) fn e8_node_vectors() -> [LatticeVec; 8] {
    use AffPoint::{Empty, Full, P12, P13, P14, P23, P24, P34};
    [
        -LatticeVec::basis(Full),
        LatticeVec::half_sum([P12, P34, Empty, Full], [1, -1, 1, 1]),
        LatticeVec::half_sum([P12, P13, P24, P34], [-1, 1, -1, 1]),
        LatticeVec::half_sum([P13, P14, P23, P24], [-1, -1, 1, 1]),
        LatticeVec::half_sum([P13, P14, P23, P24], [-1, 1, -1, 1]),
        LatticeVec::half_sum([Empty, P13, P14, P34], [-1, 1, -1, -1]),
        LatticeVec::half_sum([P13, P14, P23, P24], [-1, 1, 1, -1]),
        LatticeVec::half_sum([P12, P14, P23, P34], [1, -1, -1, 1]),
    ]
}

/// The eight divisor classes of the incidence marking, in the same diagram
/// order.
pub(crate) fn incidence_node_classes() -> Result<[PicClass; 8]> {
    let fc = fiber_component_classes()?;
    let l = PicClass::ruling_l();
    let r = PicClass::ruling_r();
    let u = PicClass::u;
    Ok([
        -fc.f11,
        -l + u(1, 3) + u(3, 1),
        l - u(2, 4) - u(1, 3),
        l + r - u(2, 3) - u(3, 1) - u(1, 4) - u(4, 2),
        l + r - u(3, 1) - u(3, 2) - u(4, 1) - u(4, 2),
        r - u(1, 3) - u(1, 4),
        l + r - u(2, 3) - u(3, 1) - u(4, 1) - u(2, 4),
        l - u(3, 2) - u(1, 4),
    ])
}

/// An isometry from (fiber-class complement)/(fiber class) onto the E₈ root
/// lattice, presented by eight class–root pairs with matching Gram
/// matrices.
#[derive(Clone, Debug, Serialize)]
pub struct MarkingIso {
    classes: [PicClass; 8],
    vectors: [LatticeVec; 8],
    gram: [[i64; 8]; 8],
}

impl MarkingIso {
    /// Assemble a marking from its eight pairs, verifying entry by entry
    /// that the divisor-class Gram matrix equals the root Gram matrix (and
    /// that the common matrix is unimodular, so projection is defined).
    pub fn from_pairs(classes: [PicClass; 8], vectors: [LatticeVec; 8]) -> Result<MarkingIso> {
        let mut gram = [[0i64; 8]; 8];
        for i in 0..8 {
            for j in 0..8 {
                let lhs = pic_pairing(&classes[i], &classes[j]);
                let rhs = vectors[i].inner(&vectors[j]);
                if lhs != rhs {
                    return Err(Error::GramMismatch { i, j, lhs, rhs });
                }
                gram[i][j] = lhs;
            }
        }
        let g: Vec<Vec<i64>> = gram.iter().map(|row| row.to_vec()).collect();
        if exact::det(&g).abs() != 1 {
            return Err(Error::ConsistencyFailure(
                "marking Gram matrix must be unimodular".into(),
            ));
        }
        Ok(MarkingIso {
            classes,
            vectors,
            gram,
        })
    }

    /// The eight class–root pairs in diagram order.
    pub fn pairs(&self) -> [(PicClass, LatticeVec); 8] {
        std::array::from_fn(|k| (self.classes[k], self.vectors[k]))
    }

    /// The common Gram matrix of both sides.
    pub fn gram(&self) -> [[i64; 8]; 8] {
        self.gram
    }

    /// Apply the isometry: the image of a class orthogonal to the fiber
    /// class, well defined modulo the fiber class because every node class
    /// is orthogonal to it.
    ///
    /// Coordinates in the root basis solve `G·x = (c · node_k)_k`; they are
    /// integers because the Gram matrix is unimodular.
    pub fn project(&self, c: &PicClass) -> Result<LatticeVec> {
        let pairing = pic_pairing(c, &PicClass::fiber_class());
        if pairing != 0 {
            return Err(Error::NotInFPerp { pairing });
        }
        let g: Vec<Vec<i64>> = self.gram.iter().map(|row| row.to_vec()).collect();
        let v: Vec<i64> = self.classes.iter().map(|n| pic_pairing(c, n)).collect();
        let x = exact::solve_integer(&g, &v).ok_or_else(|| {
            Error::ConsistencyFailure("unimodular marking solve must be integral".into())
        })?;
        Ok(self
            .vectors
            .iter()
            .zip(&x)
            .fold(LatticeVec::ZERO, |acc, (e, &k)| acc + *e * k))
    }
}

/// The incidence marking: node classes read off from exceptional curves and
/// reducible-fiber components, paired with the fixed root list.
pub fn incidence_marking() -> Result<MarkingIso> {
    MarkingIso::from_pairs(incidence_node_classes()?, e8_node_vectors())
}

/// The chain marking attached to a section-chain assignment: node classes
/// are built from the bundle class, the chain of sections, and a fiber
/// component, paired with the same fixed root list.
pub fn chain_marking(assignment: &BAssignment) -> Result<MarkingIso> {
    MarkingIso::from_pairs(assignment.node_classes()?, e8_node_vectors())
}

/// Project a class to the root lattice through the incidence marking — the
/// default evaluation of the quotient isometry.
pub fn project_mod_f(c: &PicClass) -> Result<LatticeVec> {
    incidence_marking()?.project(c)
}
