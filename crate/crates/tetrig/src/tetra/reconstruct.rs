//! Reconstruction of a marked tetrahedron from a length character: the
//! inverse direction of the moduli correspondence. Vertices are placed at
//! the coordinate points and the quadric coefficients are read off the
//! character; the marking is recovered by matching edge cross-ratios.

use num_complex::Complex64 as Cx;

use super::lift::{is_generic_character, length_function, CharacterHom, SubLattice};
use super::marked::{cr_value, l_generators, MarkedTetra};
use super::{det::det_l, EDGES};
use crate::e8lattice::{AffPoint, LatticeVec};
use crate::error::{Error, Result};
use crate::projgeom::{LineP3, PlaneP3, PointP3, QuadricP3};
use crate::tol;

/// The candidate quadric matrix with unit `x1²` coefficient, diagonal
/// `(1, L(e12), L(e13), L(e14))`, cross terms `±(L(e1j)+1)` on the first
/// row and paired face-root values elsewhere. `x1x2_minus` selects between
/// the two sign conventions for the `x1x2` term (see
/// [`reconstruct_from_l`]).
fn candidate_matrix(hom: &CharacterHom, x1x2_minus: bool) -> Result<[[Cx; 4]; 4]> {
    let one = Cx::new(1.0, 0.0);
    let l12 = hom.edge_value(0, 1);
    let l13 = hom.edge_value(0, 2);
    let l14 = hom.edge_value(0, 3);

    // paired face values L((e_1i + e_1j ± e_ij + e_∅)/2) for {i,j} ⊂ {2,3,4}
    let pair_sum = |a: AffPoint, b: AffPoint, c: AffPoint| -> Result<Cx> {
        let plus = hom.eval(&LatticeVec::half_sum([a, b, c, AffPoint::Empty], [1, 1, 1, 1]))?;
        let minus = hom.eval(&LatticeVec::half_sum([a, b, c, AffPoint::Empty], [1, 1, -1, 1]))?;
        Ok(plus + minus)
    };
    let s23 = pair_sum(AffPoint::P12, AffPoint::P13, AffPoint::P23)?;
    let s24 = pair_sum(AffPoint::P12, AffPoint::P14, AffPoint::P24)?;
    let s34 = pair_sum(AffPoint::P13, AffPoint::P14, AffPoint::P34)?;

    let sign12 = if x1x2_minus { -1.0 } else { 1.0 };
    let mut m = [[Cx::new(0.0, 0.0); 4]; 4];
    m[0][0] = one;
    m[1][1] = l12;
    m[2][2] = l13;
    m[3][3] = l14;
    m[0][1] = sign12 * (l12 + one) / 2.0;
    m[0][2] = (l13 + one) / 2.0;
    m[0][3] = (l14 + one) / 2.0;
    m[1][2] = s23 / 2.0;
    m[1][3] = s24 / 2.0;
    m[2][3] = s34 / 2.0;
    for i in 0..4 {
        for j in 0..i {
            m[i][j] = m[j][i];
        }
    }
    Ok(m)
}

/// Build a marked tetrahedron with the given length character and
/// orientation bit. The character must be generic with nonvanishing
/// determinant (the open moduli stratum); the two orientation bits produce
/// the two elements of the fiber.
///
/// The published coefficient display carries a minus sign on the `x1x2`
/// cross term only; that convention is tried first, and if its length
/// character fails to round-trip, the symmetric all-plus convention is used
/// instead (the candidate that reproduces the character wins).
pub fn reconstruct_from_l(hom: &CharacterHom, orientation: bool) -> Result<MarkedTetra> {
    if hom.tag() != SubLattice::E7L {
        return Err(Error::InvalidInput(
            "reconstruction requires a length-side character".into(),
        ));
    }
    if !is_generic_character(hom)? {
        return Err(Error::NotInModuli(
            "character equals 1 on a root other than ±e_∅".into(),
        ));
    }
    let det = det_l(hom);
    if det.norm() < 1e-10 {
        return Err(Error::NotInModuli(format!(
            "edge-value determinant {det} vanishes"
        )));
    }

    let mut best_residual = f64::INFINITY;
    for x1x2_minus in [true, false] {
        let m = candidate_matrix(hom, x1x2_minus)?;
        let Ok(q) = QuadricP3::new(m) else { continue };
        match try_candidate(hom, q, orientation) {
            Ok(t) => return Ok(t),
            Err(Error::RoundTripFailure { residual }) => {
                best_residual = best_residual.min(residual);
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::RoundTripFailure { residual: best_residual })
}

/// Assemble the coordinate tetrahedron on a candidate quadric, recover the
/// marking from the edge values, and accept only if the full character
/// round-trips on a generating set.
fn try_candidate(hom: &CharacterHom, q: QuadricP3, orientation: bool) -> Result<MarkedTetra> {
    let one = Cx::new(1.0, 0.0);
    let zero_c = Cx::new(0.0, 0.0);
    let verts: [PointP3; 4] = std::array::from_fn(|i| {
        let mut p = [zero_c; 4];
        p[i] = one;
        PointP3(p)
    });
    let planes: [PlaneP3; 4] = std::array::from_fn(|i| {
        let mut h = [zero_c; 4];
        h[i] = one;
        PlaneP3(h)
    });

    // per-edge ordering by cross-ratio match, collecting the ambiguous
    // edges (value −1, self-reciprocal) for the exhaustive pass below
    let zero = PointP3([zero_c; 4]);
    let mut pairs = [(zero, zero); 6];
    let mut free_edges: Vec<usize> = Vec::new();
    for (e, &(i, j)) in EDGES.iter().enumerate() {
        let target = hom.edge_value(i, j);
        let line = LineP3::through(verts[i], verts[j])?;
        let (x, y) = q.line_intersection(&line)?;
        let c = cr_value([&verts[i], &x, &verts[j], &y], &line)?;
        if (target - target.inv()).norm() < 1e-6 {
            pairs[e] = (x, y);
            free_edges.push(e);
        } else if (c - target).norm() <= (c.inv() - target).norm() {
            pairs[e] = (x, y);
        } else {
            pairs[e] = (y, x);
        }
    }

    let mut best_residual = f64::INFINITY;
    for mask in 0u32..(1 << free_edges.len()) {
        let mut trial = pairs.clone();
        for (bit, &e) in free_edges.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                trial[e] = (trial[e].1, trial[e].0);
            }
        }
        let t = MarkedTetra::assemble(q.clone(), planes, orientation, trial)?;
        let residual = round_trip_residual(hom, &t)?;
        if residual < tol::CHAIN {
            return Ok(t);
        }
        best_residual = best_residual.min(residual);
    }
    Err(Error::RoundTripFailure { residual: best_residual })
}

/// Largest relative defect of the reconstructed length character against the
/// target on the fourteen-generator set.
fn round_trip_residual(hom: &CharacterHom, t: &MarkedTetra) -> Result<f64> {
    let lt = length_function(t)?;
    let mut worst = 0.0f64;
    for v in l_generators() {
        let (a, b) = (hom.eval(&v)?, lt.eval(&v)?);
        worst = worst.max((a - b).norm() / a.norm().max(b.norm()).max(1.0));
    }
    Ok(worst)
}
