//! Two independent routes to the determinant invariant of a length
//! character: a 4×4 closed form in the lifted edge values, and an expansion
//! as a weighted sum of character values over the ambient root system. Their
//! agreement, and the invariance of the root expansion under the common Weyl
//! group, are exercised by tests rather than assumed.

use num_complex::Complex64 as Cx;

use super::lift::CharacterHom;
use super::EDGES;
use crate::e8lattice::{roots, AffPoint, LatticeVec, WeylElem};
use crate::error::Result;
use crate::projgeom::det4;

/// The symmetric 4×4 matrix with unit diagonal and off-diagonal entries
/// `(ã_ij + 1/ã_ij)/2` — the cosh of the complexified edge lengths. Its
/// determinant is gauge-invariant: vertex sign flips act by a diagonal ±1
/// congruence.
pub fn det_matrix(hom: &CharacterHom) -> [[Cx; 4]; 4] {
    let mut m = [[Cx::new(0.0, 0.0); 4]; 4];
    for i in 0..4 {
        m[i][i] = Cx::new(1.0, 0.0);
    }
    for &(i, j) in EDGES.iter() {
        let a = hom.half_value(AffPoint::pair(i as u8 + 1, j as u8 + 1));
        let entry = (a + a.inv()) / 2.0;
        m[i][j] = entry;
        m[j][i] = entry;
    }
    m
}

/// The determinant of [`det_matrix`] (closed form).
pub fn det_l(hom: &CharacterHom) -> Cx {
    det4(&det_matrix(hom))
}

/// The determinant as a root-system sum:
/// `−3/2 + (1/8)·Σ L(r)` over the length-side roots off the common
/// subsystem, `−(1/8)·Σ L(r)` over the common subsystem, and
/// `+(1/64)·Σ L(2r)` over the 48 roots lying in neither index-7 subsystem.
pub fn det_l_root_expansion(hom: &CharacterHom) -> Result<Cx> {
    det_l_root_expansion_twisted(hom, &WeylElem::identity())
}

/// The root expansion of the precomposition `L∘w`. Each root is weighted by
/// its own class and the character is evaluated at its image, so this equals
/// [`det_l`] of the original character precisely when `w` permutes the three
/// root classes — the Weyl-invariance statement under test.
pub fn det_l_root_expansion_twisted(hom: &CharacterHom, w: &WeylElem) -> Result<Cx> {
    let e_full = LatticeVec::basis(AffPoint::Full);
    let e_empty = LatticeVec::basis(AffPoint::Empty);
    let mut sum = Cx::new(-1.5, 0.0);
    for r in roots() {
        let length_side = r.inner(&e_full) == 0;
        let angle_side = r.inner(&e_empty) == 0;
        let img = w.apply(r);
        match (length_side, angle_side) {
            (true, true) => sum -= hom.eval(&img)? / 8.0,
            (true, false) => sum += hom.eval(&img)? / 8.0,
            (false, true) => {} // angle-side-only roots do not appear
            (false, false) => sum += double_value(hom, &img) / 64.0,
        }
    }
    Ok(sum)
}

/// `Π_s half[s]^{2·d_s(r)}` — the value the character would take on `2r`.
/// `2r` itself is outside the tagged sublattice for the mixed roots, but the
/// doubled product is still gauge-invariant (vertex-flip characters are
/// trivial on doubled vectors), so it is computed directly from half-values.
fn double_value(hom: &CharacterHom, r: &LatticeVec) -> Cx {
    let mut out = Cx::new(1.0, 0.0);
    for (s, &d) in AffPoint::ALL.iter().zip(r.doubled().iter()) {
        if d != 0 {
            out *= hom.half_value(*s).powi(2 * d as i32);
        }
    }
    out
}
