//! Lifting edge cross-ratios to a consistent system of square roots, and the
//! resulting length/angle characters on the root-lattice labels.
//!
//! Each edge carries the cross-ratio `c_ij = [A_i, E_ij, A_j, E_ji]`. A
//! *lift* chooses a square root `ã_ij` of each `c_ij` such that on every
//! face the product `ã_ij·ã_jk·ã_ik` equals a specific face cross-ratio (a
//! collinearity relation of the three edge points with the face's vertex
//! lines). The lift exists and is unique up to vertex sign flips
//! `ã_ij ↦ γ_i γ_j ã_ij`; every product over a lattice vector orthogonal to
//! `e_1234` is gauge-invariant.

use num_complex::Complex64 as Cx;
use serde::{Deserialize, Serialize};

use super::marked::{cr_value, MarkedTetra};
use super::{edge_index, EDGES, FACES};
use crate::e8lattice::{sub_roots, AffPoint, LatticeVec, SubSystem};
use crate::error::{Error, Result};
use crate::projgeom::{line_line_intersection, LineP3};
use crate::tol;

/// Which of the two index-7 sublattices a character is defined on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SubLattice {
    /// Vectors orthogonal to `e_1234`: the domain of the length character.
    E7L,
    /// Vectors orthogonal to `e_∅`: the domain of the angle character.
    E7A,
}

impl SubLattice {
    /// The frame vector the domain is orthogonal to.
    fn anchor(self) -> AffPoint {
        match self {
            SubLattice::E7L => AffPoint::Full,
            SubLattice::E7A => AffPoint::Empty,
        }
    }

    pub(crate) fn name(self) -> &'static str {
        match self {
            SubLattice::E7L => "length-side sublattice (⟂ e_1234)",
            SubLattice::E7A => "angle-side sublattice (⟂ e_∅)",
        }
    }

    /// The corresponding root subsystem.
    pub fn sub_system(self) -> SubSystem {
        match self {
            SubLattice::E7L => SubSystem::E7L,
            SubLattice::E7A => SubSystem::E7A,
        }
    }
}

/// A lifted system of edge square roots `ã_ij`, in [`EDGES`] order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LiftData {
    pub values: [Cx; 6],
}

/// A multiplicative character on one of the two index-7 sublattices, stored
/// through one value per frame label (the value on the *half* frame vector,
/// so that half-sum roots evaluate to a single product).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharacterHom {
    tag: SubLattice,
    half: [Cx; 8],
}

impl CharacterHom {
    /// Assemble a character from explicit half-values (the values on the
    /// half frame vectors; entries at `∅` and `1234` are conventionally 1
    /// for characters arising from lifts).
    pub fn new(tag: SubLattice, half: [Cx; 8]) -> CharacterHom {
        CharacterHom { tag, half }
    }

    pub fn tag(&self) -> SubLattice {
        self.tag
    }

    /// The stored value on the half frame vector at a label.
    pub fn half_value(&self, s: AffPoint) -> Cx {
        self.half[s.index()]
    }

    /// Evaluate on a lattice vector in the character's domain.
    pub fn eval(&self, v: &LatticeVec) -> Result<Cx> {
        if v.inner(&LatticeVec::basis(self.tag.anchor())) != 0 {
            return Err(Error::VectorNotInDomain {
                vector: v.doubled(),
                domain: self.tag.name(),
            });
        }
        let mut out = Cx::new(1.0, 0.0);
        for (s, &d) in AffPoint::ALL.iter().zip(v.doubled().iter()) {
            if d != 0 {
                out *= self.half[s.index()].powi(d as i32);
            }
        }
        Ok(out)
    }

    /// The value on the frame vector `e_ij` (0-based vertex indices).
    pub fn edge_value(&self, i: usize, j: usize) -> Cx {
        let s = AffPoint::pair(i as u8 + 1, j as u8 + 1);
        self.half[s.index()].powi(2)
    }
}

/// Compute the lifted square roots for a marked tetrahedron.
///
/// The principal square roots of the six edge cross-ratios are corrected by
/// signs `ε_ij = ±1` solving the four face relations; the face sign pattern
/// is solved over GF(2) (free choices are fixed to `+1`, which is the gauge
/// normalization used throughout).
pub fn lift_data(t: &MarkedTetra) -> Result<LiftData> {
    let mut sqrts = [Cx::new(0.0, 0.0); 6];
    for (e, &(i, j)) in EDGES.iter().enumerate() {
        sqrts[e] = t.edge_cross_ratio(i, j)?.sqrt();
    }

    // face relation targets: b_f = 0 if the principal roots already satisfy
    // the face, 1 if they are off by a sign
    let mut rows = [0u8; 4]; // incidence masks over the six edges
    let mut rhs = [0u8; 4];
    for (f, &(i, j, k)) in FACES.iter().enumerate() {
        let (e1, e2, e3) = (edge_index(i, j), edge_index(i, k), edge_index(j, k));
        rows[f] = (1 << e1) | (1 << e2) | (1 << e3);
        let target = face_cross_ratio(t, i, j, k)?;
        let rho = sqrts[e1] * sqrts[e2] * sqrts[e3] / target;
        let (plus, minus) = ((rho - 1.0).norm(), (rho + 1.0).norm());
        if plus.min(minus) > 1e-6 {
            return Err(Error::SignSystemInconsistent(format!(
                "face {}{}{} square-root defect {rho} is not ±1",
                i + 1,
                j + 1,
                k + 1
            )));
        }
        rhs[f] = u8::from(minus < plus);
    }

    let eps = solve_gf2(rows, rhs)?;
    let mut values = sqrts;
    for (e, v) in values.iter_mut().enumerate() {
        if eps >> e & 1 == 1 {
            *v = -*v;
        }
    }
    Ok(LiftData { values })
}

/// The face target `[A_k, E_ki, A_i, X]` with `X` the intersection of the
/// edge line `A_iA_k` with the line through `E_ij` and `E_jk`.
fn face_cross_ratio(t: &MarkedTetra, i: usize, j: usize, k: usize) -> Result<Cx> {
    let carrier = t.edge_line(i, k)?;
    let transversal = LineP3::through(*t.edge_point(i, j), *t.edge_point(j, k))?;
    let x = line_line_intersection(&carrier, &transversal)?;
    cr_value([&t.vertices()[k], t.edge_point(k, i), &t.vertices()[i], &x], &carrier)
}

/// Solve the GF(2) system `rows · x = rhs` for a 6-bit unknown by Gaussian
/// elimination, setting free coordinates to zero. The returned mask is the
/// unique such solution; an inconsistent system is an error.
fn solve_gf2(mut rows: [u8; 4], mut rhs: [u8; 4]) -> Result<u8> {
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut next = 0usize;
    for col in 0..6 {
        if let Some(r) = (next..4).find(|&r| rows[r] >> col & 1 == 1) {
            rows.swap(next, r);
            rhs.swap(next, r);
            for other in 0..4 {
                if other != next && rows[other] >> col & 1 == 1 {
                    rows[other] ^= rows[next];
                    rhs[other] ^= rhs[next];
                }
            }
            pivots.push((next, col));
            next += 1;
        }
    }
    for r in next..4 {
        if rows[r] == 0 && rhs[r] != 0 {
            return Err(Error::SignSystemInconsistent(
                "face sign relations are mutually contradictory".into(),
            ));
        }
    }
    let mut x = 0u8;
    for &(r, c) in &pivots {
        if rhs[r] & 1 == 1 {
            x |= 1 << c;
        }
    }
    Ok(x)
}

/// The length character of a marked tetrahedron: `L(e_ij)` is the edge
/// cross-ratio, `L(e_∅) = L(e_1234) = 1`, and half-sum roots evaluate to
/// products of the lifted square roots.
pub fn length_function(t: &MarkedTetra) -> Result<CharacterHom> {
    let lift = lift_data(t)?;
    Ok(CharacterHom::new(SubLattice::E7L, half_from_lift(&lift)))
}

/// The angle character: the length character of the polar-dual tetrahedron
/// pulled back along the complement involution of the frame labels.
pub fn angle_function(t: &MarkedTetra) -> Result<CharacterHom> {
    let dual = t.dual_tetra()?;
    let dual_half = half_from_lift(&lift_data(&dual)?);
    let mut half = dual_half;
    half.reverse();
    Ok(CharacterHom::new(SubLattice::E7A, half))
}

fn half_from_lift(lift: &LiftData) -> [Cx; 8] {
    let mut half = [Cx::new(1.0, 0.0); 8];
    for (e, &(i, j)) in EDGES.iter().enumerate() {
        half[AffPoint::pair(i as u8 + 1, j as u8 + 1).index()] = lift.values[e];
    }
    half
}

/// Is a marked tetrahedron generic: its length character equals 1 only at
/// the two roots where it is identically 1?
pub fn is_generic(t: &MarkedTetra) -> Result<bool> {
    is_generic_character(&length_function(t)?)
}

/// Is the character generic: equal to 1 only on the two roots `±e_anchor`
/// where it is identically 1? Non-generic characters (e.g. from the regular
/// or the all-right tetrahedron) have extra Weyl stabilizer and fall outside
/// the open moduli stratum.
pub fn is_generic_character(hom: &CharacterHom) -> Result<bool> {
    let trivial = match hom.tag() {
        SubLattice::E7L => AffPoint::Empty,
        SubLattice::E7A => AffPoint::Full,
    };
    for r in sub_roots(hom.tag().sub_system()) {
        let fixed = r == LatticeVec::basis(trivial) || r == -LatticeVec::basis(trivial);
        if !fixed && (hom.eval(&r)? - 1.0).norm() < tol::EXACT_CASE {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Recover a dihedral angle in `(0, π)` from an angle-character value
/// `e^{2i(π−α)}`.
pub fn angle_from_value(a: Cx) -> f64 {
    let mut x = std::f64::consts::PI - 0.5 * a.arg();
    while x > std::f64::consts::PI {
        x -= std::f64::consts::PI;
    }
    while x <= 0.0 {
        x += std::f64::consts::PI;
    }
    x
}
