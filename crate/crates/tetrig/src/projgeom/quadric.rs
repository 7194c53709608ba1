//! Smooth quadric surfaces in `P³`: intersection with lines, polar duality,
//! the two ruling families, and cross-ratios on plane sections.

use super::linalg::{invert4, kernel_basis, mat_mul, mat_vec, transpose};
use super::p1::ProjPoint1;
use super::p3::{
    cross_ratio_on_line, line_line_intersection, LineP3, PlaneP3, PointP3,
};
use super::{proportional, Cx};
use crate::error::{Error, Result};
use crate::tol;

/// A smooth quadric `{x : xᵀ M x = 0}` with `M` symmetric 4×4, up to scale.
///
/// The inverse matrix is computed (and the smoothness invariant enforced) at
/// construction, so pole computations never re-factorize.
#[derive(Clone, Debug)]
pub struct QuadricP3 {
    m: [[Cx; 4]; 4],
    m_inv: [[Cx; 4]; 4],
}

impl QuadricP3 {
    /// Build from a symmetric coefficient matrix. Rejects visibly singular
    /// matrices (non-invertible ⇒ the quadric is a cone or worse).
    pub fn new(m: [[Cx; 4]; 4]) -> Result<QuadricP3> {
        for i in 0..4 {
            for j in 0..4 {
                debug_assert!(
                    (m[i][j] - m[j][i]).norm() <= 1e-12 * (m[i][j].norm() + m[j][i].norm() + 1.0),
                    "quadric matrix must be symmetric"
                );
            }
        }
        let m_inv = invert4(&m).ok_or_else(|| {
            Error::DegenerateConic("quadric matrix is singular (not a smooth quadric)".into())
        })?;
        Ok(QuadricP3 { m, m_inv })
    }

    /// Diagonal quadric `Σ c_i x_i²`.
    pub fn diagonal(c: [Cx; 4]) -> Result<QuadricP3> {
        let mut m = [[Cx::new(0.0, 0.0); 4]; 4];
        for i in 0..4 {
            m[i][i] = c[i];
        }
        QuadricP3::new(m)
    }

    /// The coefficient matrix.
    pub fn matrix(&self) -> &[[Cx; 4]; 4] {
        &self.m
    }

    /// `xᵀ M x`.
    pub fn eval(&self, x: &PointP3) -> Cx {
        let mx = mat_vec(&self.m, &x.0);
        (0..4).map(|i| x.0[i] * mx[i]).sum()
    }

    /// Scale-free on-quadric residual `|xᵀMx| / (‖M‖·‖x‖²)`.
    pub fn residual(&self, x: &PointP3) -> f64 {
        let scale: f64 = self.m.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max);
        self.eval(x).norm() / (scale * x.norm() * x.norm())
    }

    /// Is `x` on the quadric within `tolerance`?
    pub fn contains(&self, x: &PointP3, tolerance: f64) -> bool {
        self.residual(x) <= tolerance
    }

    /// Polar plane of a point: `h = M·x`. For `x` on the quadric this is the
    /// tangent plane.
    pub fn polar_plane(&self, x: &PointP3) -> PlaneP3 {
        PlaneP3(mat_vec(&self.m, &x.0))
    }

    /// Pole of a plane: `x = M⁻¹·h`. Inverse of [`QuadricP3::polar_plane`].
    pub fn pole(&self, h: &PlaneP3) -> PointP3 {
        PointP3(mat_vec(&self.m_inv, &h.0))
    }

    /// Polar line of a line: the intersection of the polar planes of any two
    /// spanning points, returned as a span of two kernel points.
    pub fn polar_line(&self, l: &LineP3) -> Result<LineP3> {
        let h1 = self.polar_plane(&l.p);
        let h2 = self.polar_plane(&l.q);
        let kernel = kernel_basis(&[h1.0, h2.0], 1e-10);
        if kernel.len() != 2 {
            return Err(Error::DegenerateConfiguration(format!(
                "polar planes span a kernel of dimension {} ≠ 2",
                kernel.len()
            )));
        }
        LineP3::through(PointP3(kernel[0]), PointP3(kernel[1]))
    }

    /// Intersect a line with the quadric: the two solutions of the restricted
    /// quadratic `a λ² + 2b λμ + c μ²` in deterministic order.
    ///
    /// Errors: [`Error::TangentLine`] when the normalized discriminant falls
    /// under [`tol::TANGENT_DISC`], [`Error::LineInQuadric`] when the
    /// restriction vanishes identically.
    pub fn line_intersection(&self, l: &LineP3) -> Result<(PointP3, PointP3)> {
        let mp = mat_vec(&self.m, &l.p.0);
        let mq = mat_vec(&self.m, &l.q.0);
        let a: Cx = (0..4).map(|i| l.p.0[i] * mp[i]).sum();
        let b: Cx = (0..4).map(|i| l.p.0[i] * mq[i]).sum();
        let c: Cx = (0..4).map(|i| l.q.0[i] * mq[i]).sum();

        let mscale: f64 = self.m.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max);
        let pscale = l.p.norm() * l.p.norm();
        let qscale = l.q.norm() * l.q.norm();
        let coeff_scale = mscale * pscale.max(qscale);
        if a.norm() <= 1e-13 * coeff_scale
            && b.norm() <= 1e-13 * coeff_scale
            && c.norm() <= 1e-13 * coeff_scale
        {
            return Err(Error::LineInQuadric);
        }

        let disc = b * b - a * c;
        let disc_scale = (b.norm() * b.norm()).max(a.norm() * c.norm()).max(
            1e-30 * coeff_scale * coeff_scale,
        );
        if disc.norm() <= tol::TANGENT_DISC * disc_scale {
            return Err(Error::TangentLine {
                discriminant: disc.norm() / disc_scale,
            });
        }

        let s = disc.sqrt();
        // avoid cancellation: fold the square root into the larger of ±b
        let qq = if (b + s).norm() >= (b - s).norm() { -(b + s) } else { -(b - s) };
        // roots of the homogeneous quadratic: (λ:μ) = (qq : a) and (c : qq)
        let x1 = l.p.combine(qq, &l.q, a);
        let x2 = l.p.combine(c, &l.q, qq);
        Ok((x1, x2))
    }
}

// ---------------------------------------------------------------------------
// Rulings
// ---------------------------------------------------------------------------

/// Which of the two generator families through a point of the quadric.
///
/// The labels are a property of the chart (see [`RulingChart`]): one fixed
/// chart labels the families consistently across all points of the quadric,
/// which is all the marking data needs. The geometric content never depends
/// on which family is called "first"; an explicit orientation bit swaps them.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RulingFamily {
    First,
    Second,
}

/// A Segre chart for a smooth quadric: an explicit linear change of
/// coordinates carrying the quadric to `{v₀v₃ − v₁v₂ = 0}`, the image of the
/// Segre embedding `((s:t),(u:w)) ↦ (su, sw, tu, tw)`.
///
/// Built once per quadric by congruence diagonalization (symmetric Gaussian
/// elimination with full symmetric pivoting), then the fixed rotation from
/// `Σ y_i²` to `v₀v₃ − v₁v₂`. The chart fixes the family labels: "first"
/// fixes the `(s:t)` factor, "second" fixes `(u:w)`.
#[derive(Clone, Debug)]
pub struct RulingChart {
    /// `v = to_segre · x`
    to_segre: [[Cx; 4]; 4],
    /// `x = from_segre · v`
    from_segre: [[Cx; 4]; 4],
}

impl RulingChart {
    /// Build the chart. Fails only on (near-)singular quadrics.
    pub fn new(q: &QuadricP3) -> Result<RulingChart> {
        let scale: f64 = q.m.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max);
        let mut a = q.m.map(|row| row.map(|z| z / scale));
        let mut c = [[Cx::new(0.0, 0.0); 4]; 4];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = Cx::new(1.0, 0.0);
        }

        // symmetric congruence elimination: after step k the leading k×k
        // block is diagonal and column ops are mirrored into c
        for k in 0..4 {
            // choose the largest remaining diagonal pivot
            let mut pi = k;
            for i in k..4 {
                if a[i][i].norm() > a[pi][pi].norm() {
                    pi = i;
                }
            }
            if a[pi][pi].norm() <= 1e-12 {
                // no usable diagonal mass: materialize some from the largest
                // off-diagonal entry via col_i += col_j (and its row mirror)
                let (mut bi, mut bj, mut best) = (k, k, 0.0f64);
                for i in k..4 {
                    for j in k..4 {
                        if i != j && a[i][j].norm() > best {
                            (bi, bj, best) = (i, j, a[i][j].norm());
                        }
                    }
                }
                if best <= 1e-12 {
                    return Err(Error::DegenerateConic(
                        "quadric form is degenerate on the remaining block".into(),
                    ));
                }
                for r in 0..4 {
                    let v = a[r][bj];
                    a[r][bi] += v;
                }
                for cidx in 0..4 {
                    let v = a[bj][cidx];
                    a[bi][cidx] += v;
                }
                for r in 0..4 {
                    let v = c[r][bj];
                    c[r][bi] += v;
                }
                pi = bi;
            }
            if pi != k {
                for r in 0..4 {
                    a[r].swap(k, pi);
                }
                a.swap(k, pi);
                for r in 0..4 {
                    c[r].swap(k, pi);
                }
            }
            let pivot = a[k][k];
            for j in k + 1..4 {
                let f = a[k][j] / pivot;
                if f.norm() == 0.0 {
                    continue;
                }
                for r in 0..4 {
                    let v = a[r][k];
                    a[r][j] -= f * v;
                }
                for cidx in 0..4 {
                    let v = a[k][cidx];
                    a[j][cidx] -= f * v;
                }
                for r in 0..4 {
                    let v = c[r][k];
                    c[r][j] -= f * v;
                }
            }
        }

        // scale columns to make the form exactly Σ y_i² (principal branch)
        for k in 0..4 {
            let s = a[k][k].sqrt();
            for r in 0..4 {
                c[r][k] /= s;
            }
        }

        // fixed rotation Σ y² → v0 v3 − v1 v2:
        //   y0 = (v0+v3)/2, y1 = (v0−v3)/(2i), y2 = (v1−v2)/2, y3 = (v1+v2)/(2i)
        let half = Cx::new(0.5, 0.0);
        let half_over_i = Cx::new(0.0, -0.5); // 1/(2i)
        let s_inv: [[Cx; 4]; 4] = [
            [half, Cx::new(0.0, 0.0), Cx::new(0.0, 0.0), half],
            [half_over_i, Cx::new(0.0, 0.0), Cx::new(0.0, 0.0), -half_over_i],
            [Cx::new(0.0, 0.0), half, -half, Cx::new(0.0, 0.0)],
            [Cx::new(0.0, 0.0), half_over_i, half_over_i, Cx::new(0.0, 0.0)],
        ];
        let from_segre = mat_mul(&c, &s_inv);
        let to_segre = invert4(&from_segre).ok_or_else(|| {
            Error::DegenerateConic("Segre chart is singular".into())
        })?;

        let chart = RulingChart { to_segre, from_segre };
        // invariant: pulling the quadric through the chart gives v0v3 − v1v2
        debug_assert!(chart.verify_against(q), "Segre chart failed to normalize the quadric");
        Ok(chart)
    }

    fn verify_against(&self, q: &QuadricP3) -> bool {
        let pt = transpose(&self.from_segre);
        let inner = mat_mul(&pt, &mat_mul(&q.m, &self.from_segre));
        let mut n = [[Cx::new(0.0, 0.0); 4]; 4];
        n[0][3] = Cx::new(0.5, 0.0);
        n[3][0] = Cx::new(0.5, 0.0);
        n[1][2] = Cx::new(-0.5, 0.0);
        n[2][1] = Cx::new(-0.5, 0.0);
        let flat_i: Vec<Cx> = inner.iter().flatten().copied().collect();
        let flat_n: Vec<Cx> = n.iter().flatten().copied().collect();
        proportional(&flat_i, &flat_n, 1e-8)
    }

    /// Segre parameters `((s:t), (u:w))` of a point on the quadric.
    pub fn params(&self, x: &PointP3) -> (ProjPoint1, ProjPoint1) {
        let v = mat_vec(&self.to_segre, &x.0);
        // (s:t) = (v0:v2) or (v1:v3); (u:w) = (v0:v1) or (v2:v3) — the point
        // being on the quadric makes the two choices proportional; pick the
        // better-conditioned one
        let st = if v[0].norm() + v[2].norm() >= v[1].norm() + v[3].norm() {
            ProjPoint1::new(v[0], v[2])
        } else {
            ProjPoint1::new(v[1], v[3])
        };
        let uw = if v[0].norm() + v[1].norm() >= v[2].norm() + v[3].norm() {
            ProjPoint1::new(v[0], v[1])
        } else {
            ProjPoint1::new(v[2], v[3])
        };
        (st, uw)
    }

    /// The point with Segre parameters `((s:t),(u:w))`.
    pub fn point_at(&self, st: &ProjPoint1, uw: &ProjPoint1) -> PointP3 {
        let v = [st.z0 * uw.z0, st.z0 * uw.z1, st.z1 * uw.z0, st.z1 * uw.z1];
        PointP3(mat_vec(&self.from_segre, &v))
    }

    /// The generator of the given family through a point of the quadric.
    pub fn generator(&self, x: &PointP3, family: RulingFamily, q: &QuadricP3) -> Result<LineP3> {
        let residual = q.residual(x);
        if residual > tol::CHAIN {
            return Err(Error::PointOffQuadric { residual });
        }
        let (st, uw) = self.params(x);
        let (p1, p2) = match family {
            // first family: (s:t) fixed, (u:w) runs over P¹
            RulingFamily::First => (
                self.point_at(&st, &ProjPoint1::new(Cx::new(1.0, 0.0), Cx::new(0.0, 0.0))),
                self.point_at(&st, &ProjPoint1::new(Cx::new(0.0, 0.0), Cx::new(1.0, 0.0))),
            ),
            // second family: (u:w) fixed
            RulingFamily::Second => (
                self.point_at(&ProjPoint1::new(Cx::new(1.0, 0.0), Cx::new(0.0, 0.0)), &uw),
                self.point_at(&ProjPoint1::new(Cx::new(0.0, 0.0), Cx::new(1.0, 0.0)), &uw),
            ),
        };
        LineP3::through(p1, p2)
    }

    /// Left and right generators through `x`, in the order fixed by the
    /// orientation bit (`false`: first family is "left").
    pub fn rulings_through(
        &self,
        x: &PointP3,
        q: &QuadricP3,
        orientation: bool,
    ) -> Result<(LineP3, LineP3)> {
        let f = self.generator(x, RulingFamily::First, q)?;
        let s = self.generator(x, RulingFamily::Second, q)?;
        Ok(if orientation { (s, f) } else { (f, s) })
    }
}

/// One-shot convenience: build a chart and return the two generators through
/// `x`. Callers needing label consistency across several points must build
/// one [`RulingChart`] and reuse it.
pub fn rulings_through(
    q: &QuadricP3,
    x: &PointP3,
    orientation: bool,
) -> Result<(LineP3, LineP3)> {
    RulingChart::new(q)?.rulings_through(x, q, orientation)
}

/// The dual line of a transversal line via rulings: the line through
/// `L_x ∩ R_y` and `R_x ∩ L_y`, where `x, y` are the two intersection points
/// with the quadric. Equal (as a set) to the polar line, independent of the
/// orientation bit.
pub fn dual_line_via_rulings(
    q: &QuadricP3,
    chart: &RulingChart,
    l: &LineP3,
    orientation: bool,
) -> Result<LineP3> {
    let (x, y) = q.line_intersection(l)?;
    let (lx, rx) = chart.rulings_through(&x, q, orientation)?;
    let (ly, ry) = chart.rulings_through(&y, q, orientation)?;
    let p1 = line_line_intersection(&lx, &ry)?;
    let p2 = line_line_intersection(&rx, &ly)?;
    LineP3::through(p1, p2)
}

// ---------------------------------------------------------------------------
// Conic cross-ratio
// ---------------------------------------------------------------------------

/// Cross-ratio of four points on a smooth plane section of the quadric,
/// computed by projecting from a fifth section point onto a chord and taking
/// the line cross-ratio there. Independent of the chosen center (classical),
/// which tests verify from first principles.
pub fn cross_ratio_on_conic(
    pts: [&PointP3; 4],
    plane: &PlaneP3,
    q: &QuadricP3,
    tolerance: f64,
) -> Result<ProjPoint1> {
    // smoothness of the section: the pole of the plane must be off the quadric
    let pole = q.pole(plane);
    if q.residual(&pole) <= 1e-10 {
        return Err(Error::DegenerateConic(
            "plane is tangent to the quadric; its section is singular".into(),
        ));
    }
    for x in pts {
        if plane.residual(x) > tolerance {
            return Err(Error::PointOffCarrier { residual: plane.residual(x) });
        }
        if q.residual(x) > tolerance {
            return Err(Error::PointOffCarrier { residual: q.residual(x) });
        }
    }

    let center = fifth_conic_point(pts, plane, q)?;

    // chord through the first two points; the center is off it because a
    // conic meets a chord only at its two endpoints
    let chord = LineP3::through(*pts[0], *pts[1])?;
    let img3 = project_from(&center, pts[2], &chord)?;
    let img4 = project_from(&center, pts[3], &chord)?;
    cross_ratio_on_line([pts[0], pts[1], &img3, &img4], &chord, tolerance.max(1e-8))
}

/// Projection of `x` from `center` onto the line `target` (all coplanar).
fn project_from(center: &PointP3, x: &PointP3, target: &LineP3) -> Result<PointP3> {
    if center.approx_eq(x, 1e-12) {
        return Err(Error::DegenerateConic(
            "projection center coincides with a projected point".into(),
        ));
    }
    let ray = LineP3::through(*center, *x)?;
    line_line_intersection(&ray, target)
}

/// A deterministic fifth point of the plane section distinct from the four
/// given ones: intersect the section with lines through `pts[0]` and sliding
/// combinations of the others, keeping the first fresh intersection.
fn fifth_conic_point(
    pts: [&PointP3; 4],
    plane: &PlaneP3,
    q: &QuadricP3,
) -> Result<PointP3> {
    let combos: [(f64, f64); 5] = [(1.0, 1.0), (1.0, -1.0), (2.0, 1.0), (1.0, 2.0), (3.0, -1.0)];
    for (a, b) in combos {
        let aux = pts[1].combine(Cx::new(a, 0.0), pts[2], Cx::new(b, 0.0));
        if proportional(&aux.0, &pts[0].0, 1e-10) {
            continue;
        }
        let Ok(ray) = LineP3::through(*pts[0], aux) else { continue };
        debug_assert!(plane.residual(&aux) < 1e-9, "combination left the plane");
        let Ok((x1, x2)) = q.line_intersection(&ray) else { continue };
        for cand in [x1, x2] {
            let fresh = pts.iter().all(|p| !cand.approx_eq(p, 1e-9));
            if fresh {
                return Ok(cand);
            }
        }
    }
    Err(Error::DegenerateConic(
        "could not locate a fifth point on the section distinct from the inputs".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Cx {
        Cx::new(re, im)
    }

    fn rp(x: [f64; 4]) -> PointP3 {
        PointP3::from_reals(x)
    }

    /// The sphere-like quadric x1²+x2²+x3² − x0² = 0.
    fn sphere() -> QuadricP3 {
        QuadricP3::diagonal([c(-1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)]).unwrap()
    }

    /// The Segre quadric x0·x3 − x1·x2 = 0.
    fn segre() -> QuadricP3 {
        let z = c(0.0, 0.0);
        let h = c(0.5, 0.0);
        QuadricP3::new([
            [z, z, z, h],
            [z, z, -h, z],
            [z, -h, z, z],
            [h, z, z, z],
        ])
        .unwrap()
    }

    #[test]
    fn line_intersection_with_sphere_axis() {
        // the x1-axis (through [1,±1,0,0] on the sphere)
        let l = LineP3::through(rp([1.0, 0.0, 0.0, 0.0]), rp([0.0, 1.0, 0.0, 0.0])).unwrap();
        let (a, b) = sphere().line_intersection(&l).unwrap();
        let hits = [a, b];
        for x in &hits {
            assert!(sphere().residual(x) < 1e-14);
        }
        let expect1 = rp([1.0, 1.0, 0.0, 0.0]);
        let expect2 = rp([1.0, -1.0, 0.0, 0.0]);
        assert!(
            (hits[0].approx_eq(&expect1, 1e-12) && hits[1].approx_eq(&expect2, 1e-12))
                || (hits[0].approx_eq(&expect2, 1e-12) && hits[1].approx_eq(&expect1, 1e-12))
        );
    }

    #[test]
    fn tangent_line_detected() {
        // line tangent to the sphere at [1,1,0,0]: direction (0,0,1,0) offset
        let l = LineP3::through(rp([1.0, 1.0, 0.0, 0.0]), rp([1.0, 1.0, 1.0, 0.0])).unwrap();
        assert!(matches!(
            sphere().line_intersection(&l),
            Err(Error::TangentLine { .. })
        ));
    }

    #[test]
    fn line_in_quadric_detected() {
        // the Segre quadric contains the line v1 = v3 = 0
        let l = LineP3::through(rp([1.0, 0.0, 0.0, 0.0]), rp([0.0, 0.0, 1.0, 0.0])).unwrap();
        assert!(matches!(segre().line_intersection(&l), Err(Error::LineInQuadric)));
    }

    #[test]
    fn polar_plane_of_quadric_point_is_tangent() {
        let x = rp([1.0, 1.0, 0.0, 0.0]);
        let h = sphere().polar_plane(&x);
        assert!(h.residual(&x) < 1e-14, "tangent plane passes through the contact point");
        // a tangent plane meets the quadric in a singular conic: the pole
        // (= x itself) lies on the quadric
        assert!(sphere().residual(&sphere().pole(&h)) < 1e-12);
    }

    #[test]
    fn pole_and_polar_are_inverse() {
        let qq = sphere();
        let x = rp([3.0, 1.0, -2.0, 0.5]);
        let back = qq.pole(&qq.polar_plane(&x));
        assert!(back.approx_eq(&x, 1e-12));
    }

    #[test]
    fn polar_line_is_an_involution() {
        let qq = sphere();
        let l = LineP3::through(rp([1.0, 0.3, -0.2, 0.1]), rp([0.1, 1.0, 0.5, -0.7])).unwrap();
        let dual = qq.polar_line(&l).unwrap();
        let double = qq.polar_line(&dual).unwrap();
        assert!(l.contains(&double.p, 1e-10) && l.contains(&double.q, 1e-10));
    }

    #[test]
    fn segre_chart_normalizes_and_generates() {
        let qq = sphere();
        let chart = RulingChart::new(&qq).unwrap();
        let x = rp([1.0, 1.0, 0.0, 0.0]);
        let (l, r) = chart.rulings_through(&x, &qq, false).unwrap();
        for line in [&l, &r] {
            assert!(line.contains(&x, 1e-10), "generator must pass through the point");
            // the generator lies in the quadric: check 5 sample points
            for k in 0..5 {
                let t = Cx::new(0.3 * k as f64 - 0.7, 0.1 + 0.2 * k as f64);
                let sample = line.p.combine(Cx::new(1.0, 0.0), &line.q, t);
                assert!(qq.residual(&sample) < 1e-9, "generator leaves the quadric");
            }
        }
        // orientation flip swaps the families
        let (l2, r2) = chart.rulings_through(&x, &qq, true).unwrap();
        assert!(l2.contains(&r.p, 1e-9) && l2.contains(&r.q, 1e-9));
        assert!(r2.contains(&l.p, 1e-9) && r2.contains(&l.q, 1e-9));
    }

    #[test]
    fn rulings_on_segre_quadric_through_corner() {
        // through [1,0,0,0]: the coordinate generator lines {v1=v3=0}, {v2=v3=0}
        let qq = segre();
        let x = rp([1.0, 0.0, 0.0, 0.0]);
        let (l, r) = rulings_through(&qq, &x, false).unwrap();
        let gen_a = LineP3::through(rp([1.0, 0.0, 0.0, 0.0]), rp([0.0, 0.0, 1.0, 0.0])).unwrap();
        let gen_b = LineP3::through(rp([1.0, 0.0, 0.0, 0.0]), rp([0.0, 1.0, 0.0, 0.0])).unwrap();
        let covers = |line: &LineP3, target: &LineP3| {
            line.contains(&target.p, 1e-10) && line.contains(&target.q, 1e-10)
        };
        assert!(
            (covers(&l, &gen_a) && covers(&r, &gen_b)) || (covers(&l, &gen_b) && covers(&r, &gen_a)),
            "generators through the corner must be the two coordinate lines"
        );
    }

    #[test]
    fn same_family_generators_are_disjoint_or_equal() {
        let qq = sphere();
        let chart = RulingChart::new(&qq).unwrap();
        // two distinct points on the sphere quadric
        let x = rp([1.0, 1.0, 0.0, 0.0]);
        let y = rp([5.0, 3.0, 0.0, 4.0]);
        assert!(qq.residual(&y) < 1e-12);
        let lx = chart.generator(&x, RulingFamily::First, &qq).unwrap();
        let ly = chart.generator(&y, RulingFamily::First, &qq).unwrap();
        // same family: either identical or skew — never a single intersection
        match line_line_intersection(&lx, &ly) {
            Err(Error::AuxiliaryDegenerate(_)) | Err(Error::DegenerateConfiguration(_)) => {}
            Ok(_) => panic!("distinct same-family generators must be skew"),
            Err(e) => panic!("unexpected error {e}"),
        }
        // opposite families always meet
        let ry = chart.generator(&y, RulingFamily::Second, &qq).unwrap();
        line_line_intersection(&lx, &ry).expect("opposite families meet in one point");
    }

    #[test]
    fn dual_line_via_rulings_matches_polar_line() {
        let qq = sphere();
        let chart = RulingChart::new(&qq).unwrap();
        let l = LineP3::through(rp([1.0, 0.2, 0.3, -0.4]), rp([1.0, -0.5, 0.8, 0.1])).unwrap();
        let via_rulings = dual_line_via_rulings(&qq, &chart, &l, false).unwrap();
        let polar = qq.polar_line(&l).unwrap();
        assert!(polar.contains(&via_rulings.p, 1e-9));
        assert!(polar.contains(&via_rulings.q, 1e-9));
        // orientation-independence as a set
        let flipped = dual_line_via_rulings(&qq, &chart, &l, true).unwrap();
        assert!(polar.contains(&flipped.p, 1e-9));
        assert!(polar.contains(&flipped.q, 1e-9));
    }

    #[test]
    fn conic_cross_ratio_of_quarter_circle_points() {
        // section of the sphere quadric by x3 = 0 is the circle x1²+x2² = x0²;
        // points at angles 0°, 90°, 180°, 270°
        let qq = sphere();
        let h = PlaneP3([c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        let at = |deg: f64| {
            let t = deg.to_radians();
            rp([1.0, t.cos(), t.sin(), 0.0])
        };
        let p = [at(0.0), at(90.0), at(180.0), at(270.0)];
        let v = cross_ratio_on_conic([&p[0], &p[1], &p[2], &p[3]], &h, &qq, 1e-9)
            .unwrap()
            .value()
            .unwrap();
        // equals the cross-ratio of the complex parameters (1, i, −1, −i) = −1
        assert!((v - c(-1.0, 0.0)).norm() < 1e-10, "got {v}");
        // diametral pairing order gives the value 2
        let v2 = cross_ratio_on_conic([&p[0], &p[2], &p[1], &p[3]], &h, &qq, 1e-9)
            .unwrap()
            .value()
            .unwrap();
        assert!((v2 - c(2.0, 0.0)).norm() < 1e-10, "got {v2}");
    }

    #[test]
    fn conic_cross_ratio_is_center_independent() {
        // recompute the projection from several explicitly chosen centers and
        // compare — first-principles check of the classical independence
        let qq = sphere();
        let h = PlaneP3([c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        let at = |deg: f64| {
            let t = deg.to_radians();
            rp([1.0, t.cos(), t.sin(), 0.0])
        };
        let p = [at(10.0), at(75.0), at(160.0), at(295.0)];
        let reference = cross_ratio_on_conic([&p[0], &p[1], &p[2], &p[3]], &h, &qq, 1e-9).unwrap();
        for center_deg in [33.0, 120.0, 210.0, 340.0] {
            let center = at(center_deg);
            let chord = LineP3::through(p[0], p[1]).unwrap();
            let img = |x: &PointP3| {
                let ray = LineP3::through(center, *x).unwrap();
                line_line_intersection(&ray, &chord).unwrap()
            };
            let i3 = img(&p[2]);
            let i4 = img(&p[3]);
            let v = cross_ratio_on_line([&p[0], &p[1], &i3, &i4], &chord, 1e-8).unwrap();
            assert!(
                reference.approx_eq(&v, 1e-9),
                "center at {center_deg}° changed the conic cross-ratio"
            );
        }
    }

    #[test]
    fn tangent_plane_section_is_rejected() {
        let qq = sphere();
        let x = rp([1.0, 1.0, 0.0, 0.0]);
        let tangent = qq.polar_plane(&x);
        let p = [x, x, x, x];
        assert!(matches!(
            cross_ratio_on_conic([&p[0], &p[1], &p[2], &p[3]], &tangent, &qq, 1e-9),
            Err(Error::DegenerateConic(_))
        ));
    }
}
