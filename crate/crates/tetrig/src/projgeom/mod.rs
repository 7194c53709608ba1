//! Complex projective geometry primitives in `P¹` and `P³`.
//!
//! Everything here works on homogeneous coordinates over `ℂ` (so poles and
//! points at infinity need no special-casing) and is pure: all types are
//! immutable values. Equality of projective objects is proportionality of
//! coordinate vectors, tested with a relative tolerance
//! ([`tol::PROJ_EQ`](crate::tol::PROJ_EQ) by default, overridable per call).
//!
//! The higher layers build marked tetrahedra out of exactly these pieces:
//! cross-ratios of collinear points ([`cross_ratio_on_line`]), cross-ratios
//! on plane sections of a quadric via projection from a fifth section point
//! ([`cross_ratio_on_conic`]), the two ruling families of a smooth quadric
//! ([`RulingChart`]), and polar duality ([`QuadricP3`]).

mod linalg;
mod p1;
mod p3;
mod quadric;

pub use p1::{cross_ratio, mobius_through, MobiusMap, ProjPoint1};
pub use p3::{
    cross_ratio_on_line, line_line_intersection, line_plane_intersection, plane_through_points,
    point_on_planes, LineP3, PlaneP3, PointP3,
};
pub use quadric::{
    cross_ratio_on_conic, dual_line_via_rulings, rulings_through, QuadricP3, RulingChart,
    RulingFamily,
};

pub(crate) use linalg::{det4, kernel_basis};

use num_complex::Complex64;

/// Complex scalar alias used throughout the geometry layers.
pub type Cx = Complex64;

/// Relative difference of two complex numbers, safe near zero.
pub fn rel_err(a: Cx, b: Cx) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale.max(1.0_f64.min(scale))
    }
}

/// Proportionality test for homogeneous coordinate slices: all 2×2 minors of
/// the pair vanish relative to the vector scales.
pub fn proportional(a: &[Cx], b: &[Cx], tolerance: f64) -> bool {
    debug_assert_eq!(a.len(), b.len());
    let na: f64 = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let nb: f64 = b.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if na == 0.0 || nb == 0.0 {
        return false;
    }
    let mut worst: f64 = 0.0;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let minor = (a[i] * b[j] - a[j] * b[i]).norm();
            worst = worst.max(minor / (na * nb));
        }
    }
    worst <= tolerance
}
