//! Shared projective constructions for the chain recipes: residual section
//! points of a conic, spans of incident lines and points, central
//! projections, and cross-ratios of plane pencils.

use num_complex::Complex64 as Cx;

use crate::error::{Error, Result};
use crate::projgeom::{
    cross_ratio_on_line, kernel_basis, line_line_intersection, plane_through_points, LineP3,
    PlaneP3, PointP3, ProjPoint1, QuadricP3,
};

/// Projective distance of two points: the largest normalized 2×2 minor of
/// the coordinate pair. Zero exactly for proportional (equal) points, and
/// scale-free, so it is comparable against the chain tolerances.
pub(crate) fn proj_distance(a: &PointP3, b: &PointP3) -> f64 {
    let na = a.norm();
    let nb = b.norm();
    if na == 0.0 || nb == 0.0 {
        return f64::INFINITY;
    }
    let mut worst = 0.0f64;
    for i in 0..4 {
        for j in i + 1..4 {
            let minor = (a.0[i] * b.0[j] - a.0[j] * b.0[i]).norm();
            worst = worst.max(minor / (na * nb));
        }
    }
    worst
}

/// A cross-ratio as a finite nonzero number, rejecting 0/∞ outcomes.
pub(crate) fn finite_cr(v: ProjPoint1) -> Result<Cx> {
    v.value()
        .filter(|z| z.norm() > 1e-14)
        .ok_or_else(|| Error::DegenerateConfiguration("cross-ratio is 0 or ∞".into()))
}

/// Relative difference of two chain values, `|a − b| / max(|a|, |b|)`.
pub(crate) fn chain_residual(a: Cx, b: Cx) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale
    }
}

/// The intersection line of two distinct planes.
pub(crate) fn plane_plane_line(a: &PlaneP3, b: &PlaneP3, what: &str) -> Result<LineP3> {
    let kernel = kernel_basis(&[a.0, b.0], 1e-10);
    if kernel.len() != 2 {
        return Err(Error::AuxiliaryDegenerate(format!("{what}: planes do not meet in a line")));
    }
    LineP3::through(PointP3(kernel[0]), PointP3(kernel[1]))
}

/// The plane spanned by a line and a point off it.
pub(crate) fn span_line_point(l: &LineP3, x: &PointP3, what: &str) -> Result<PlaneP3> {
    plane_through_points(&l.p, &l.q, x).map_err(|_| {
        Error::AuxiliaryDegenerate(format!("{what}: point lies on the line, no spanning plane"))
    })
}

/// The plane spanned by two distinct meeting lines. Rejects skew pairs (the
/// candidate plane would not contain the second line).
pub(crate) fn span_lines(l1: &LineP3, l2: &LineP3, what: &str) -> Result<PlaneP3> {
    let third = l2.third_point();
    for cand in [&l2.p, &l2.q, &third] {
        if let Ok(h) = plane_through_points(&l1.p, &l1.q, cand) {
            if h.residual(&l2.p) < 1e-8 && h.residual(&l2.q) < 1e-8 {
                return Ok(h);
            }
        }
    }
    Err(Error::AuxiliaryDegenerate(format!(
        "{what}: lines are skew or coincident, no spanning plane"
    )))
}

/// The second point of `aux ∩ section ∩ Q`: the plane `aux` meets the conic
/// `section ∩ Q` in two points, one of which is `known`; return the other.
pub(crate) fn second_section_point(
    q: &QuadricP3,
    section: &PlaneP3,
    aux: &PlaneP3,
    known: &PointP3,
    what: &str,
) -> Result<PointP3> {
    let line = plane_plane_line(section, aux, what)?;
    let (x, y) = q.line_intersection(&line).map_err(|e| {
        Error::AuxiliaryDegenerate(format!("{what}: auxiliary line fails to cut the conic ({e})"))
    })?;
    let dx = proj_distance(&x, known);
    let dy = proj_distance(&y, known);
    if dx.min(dy) > 1e-6 {
        return Err(Error::AuxiliaryDegenerate(format!(
            "{what}: neither conic intersection matches the anchor point"
        )));
    }
    Ok(if dx <= dy { y } else { x })
}

/// Central projection of `x` from `center` onto the coplanar line `target`.
pub(crate) fn project_to_line(
    center: &PointP3,
    x: &PointP3,
    target: &LineP3,
    what: &str,
) -> Result<PointP3> {
    if proj_distance(center, x) < 1e-12 {
        return Err(Error::AuxiliaryDegenerate(format!(
            "{what}: projection center coincides with the projected point"
        )));
    }
    let ray = LineP3::through(*center, *x)
        .map_err(|e| Error::AuxiliaryDegenerate(format!("{what}: {e}")))?;
    line_line_intersection(&ray, target)
        .map_err(|e| Error::AuxiliaryDegenerate(format!("{what}: {e}")))
}

/// Cross-ratio of four planes of a pencil (all containing a common line).
///
/// Plane covectors are points of the dual `P³`; a pencil is a line there,
/// so the span-coordinate cross-ratio applies verbatim. The carrier is
/// spanned by the best-separated pair of the four, which leaves the value
/// unchanged (any two distinct members span the pencil).
pub(crate) fn pencil_cross_ratio(planes: [&PlaneP3; 4], tolerance: f64) -> Result<Cx> {
    let duals = planes.map(|h| PointP3(h.0));
    let (mut bi, mut bj, mut best) = (0usize, 1usize, -1.0f64);
    for i in 0..4 {
        for j in i + 1..4 {
            let d = proj_distance(&duals[i], &duals[j]);
            if d > best {
                (bi, bj, best) = (i, j, d);
            }
        }
    }
    if best <= 1e-12 {
        return Err(Error::AuxiliaryDegenerate(
            "plane pencil collapsed: all four planes nearly coincide".into(),
        ));
    }
    let carrier = LineP3::through(duals[bi], duals[bj])?;
    finite_cr(cross_ratio_on_line(
        [&duals[0], &duals[1], &duals[2], &duals[3]],
        &carrier,
        tolerance,
    )?)
}
