//! Points, planes, and lines of `P³` with their incidence operations.

use super::{kernel_basis, proportional, Cx};
use crate::error::{Error, Result};

use super::p1::{cross_ratio, ProjPoint1};

/// A point of `P³` in homogeneous coordinates.
#[derive(Clone, Copy, Debug)]
pub struct PointP3(pub [Cx; 4]);

/// A plane of `P³` as a homogeneous covector `h` (the plane is `h·x = 0`).
#[derive(Clone, Copy, Debug)]
pub struct PlaneP3(pub [Cx; 4]);

/// A line of `P³` stored as the span of two projectively distinct points.
#[derive(Clone, Copy, Debug)]
pub struct LineP3 {
    pub p: PointP3,
    pub q: PointP3,
}

fn norm4(v: &[Cx; 4]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn det3(m: [[Cx; 3]; 3]) -> Cx {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

impl PointP3 {
    /// Real-coordinate convenience constructor.
    pub fn from_reals(x: [f64; 4]) -> PointP3 {
        PointP3(x.map(|v| Cx::new(v, 0.0)))
    }

    /// Euclidean norm of the coordinate vector.
    pub fn norm(&self) -> f64 {
        norm4(&self.0)
    }

    /// Projective equality with explicit tolerance.
    pub fn approx_eq(&self, other: &PointP3, tolerance: f64) -> bool {
        proportional(&self.0, &other.0, tolerance)
    }

    /// Fixed linear combination `a·self + b·other` (stays on the line through
    /// the two points whatever the representatives).
    pub fn combine(&self, a: Cx, other: &PointP3, b: Cx) -> PointP3 {
        PointP3(std::array::from_fn(|i| a * self.0[i] + b * other.0[i]))
    }

    /// Scale-normalize for stable printing: largest-magnitude coordinate made
    /// `1`. Projectively a no-op.
    pub fn normalize(&self) -> PointP3 {
        let lead = self
            .0
            .iter()
            .max_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap())
            .copied()
            .expect("nonzero point");
        PointP3(self.0.map(|z| z / lead))
    }
}

impl PlaneP3 {
    /// Evaluate the defining functional at a point.
    pub fn eval(&self, x: &PointP3) -> Cx {
        (0..4).map(|i| self.0[i] * x.0[i]).sum()
    }

    /// Scale-free incidence residual `|h·x| / (‖h‖·‖x‖)`.
    pub fn residual(&self, x: &PointP3) -> f64 {
        self.eval(x).norm() / (norm4(&self.0) * x.norm())
    }

    /// Does `x` lie on the plane within `tolerance`?
    pub fn contains(&self, x: &PointP3, tolerance: f64) -> bool {
        self.residual(x) <= tolerance
    }

    /// Projective equality with explicit tolerance.
    pub fn approx_eq(&self, other: &PlaneP3, tolerance: f64) -> bool {
        proportional(&self.0, &other.0, tolerance)
    }
}

/// The plane through three points, by cofactor expansion of
/// `det [x; p; q; r]` along the `x` row (numerically cheap and pivot-free).
///
/// Fails when the three points are collinear (the cofactor vector vanishes
/// relative to the input scale).
pub fn plane_through_points(p: &PointP3, q: &PointP3, r: &PointP3) -> Result<PlaneP3> {
    let rows = [p.0, q.0, r.0];
    let minor = |skip: usize| {
        let cols: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
        det3([
            [rows[0][cols[0]], rows[0][cols[1]], rows[0][cols[2]]],
            [rows[1][cols[0]], rows[1][cols[1]], rows[1][cols[2]]],
            [rows[2][cols[0]], rows[2][cols[1]], rows[2][cols[2]]],
        ])
    };
    let h = [
        minor(0),
        -minor(1),
        minor(2),
        -minor(3),
    ];
    let scale = p.norm() * q.norm() * r.norm();
    if norm4(&h) <= 1e-13 * scale {
        return Err(Error::DegenerateConfiguration(
            "three collinear points do not span a plane".into(),
        ));
    }
    Ok(PlaneP3(h))
}

/// The point common to three planes (dual cofactor construction).
pub fn point_on_planes(a: &PlaneP3, b: &PlaneP3, c: &PlaneP3) -> Result<PointP3> {
    let dual = plane_through_points(&PointP3(a.0), &PointP3(b.0), &PointP3(c.0)).map_err(|_| {
        Error::DegenerateConfiguration("three planes in a pencil do not meet in a point".into())
    })?;
    Ok(PointP3(dual.0))
}

impl LineP3 {
    /// The line through two projectively distinct points.
    pub fn through(p: PointP3, q: PointP3) -> Result<LineP3> {
        if proportional(&p.0, &q.0, 1e-12) {
            return Err(Error::DegenerateConfiguration(
                "coincident points do not span a line".into(),
            ));
        }
        Ok(LineP3 { p, q })
    }

    /// Span coordinates `(α : β)` of a point `x ≈ α·p + β·q` on the line,
    /// solved from the best-conditioned 2×2 coordinate subsystem, plus the
    /// relative residual of the reconstruction.
    pub fn parametrize(&self, x: &PointP3) -> (ProjPoint1, f64) {
        // choose coordinate rows (i, j) maximizing |p_i q_j − p_j q_i|
        let (mut bi, mut bj, mut best) = (0usize, 1usize, -1.0f64);
        for i in 0..4 {
            for j in i + 1..4 {
                let m = (self.p.0[i] * self.q.0[j] - self.p.0[j] * self.q.0[i]).norm();
                if m > best {
                    (bi, bj, best) = (i, j, m);
                }
            }
        }
        let det = self.p.0[bi] * self.q.0[bj] - self.p.0[bj] * self.q.0[bi];
        let alpha = (x.0[bi] * self.q.0[bj] - x.0[bj] * self.q.0[bi]) / det;
        let beta = (self.p.0[bi] * x.0[bj] - self.p.0[bj] * x.0[bi]) / det;
        if alpha.norm() + beta.norm() <= 1e-300 {
            // x has no component in the solved coordinate pair, so it is
            // certainly off the line: residual 1 by convention
            return (ProjPoint1::new(Cx::new(1.0, 0.0), Cx::new(0.0, 0.0)), 1.0);
        }
        let recon = self.p.combine(alpha, &self.q, beta);
        let err = (0..4)
            .map(|i| (recon.0[i] - x.0[i]).norm_sqr())
            .sum::<f64>()
            .sqrt()
            / x.norm();
        (ProjPoint1::new(alpha, beta), err)
    }

    /// Does `x` lie on the line within `tolerance`?
    pub fn contains(&self, x: &PointP3, tolerance: f64) -> bool {
        self.parametrize(x).1 <= tolerance
    }

    /// A deterministic point on the line other than the two stored ones.
    pub fn third_point(&self) -> PointP3 {
        self.p.combine(Cx::new(1.0, 0.0), &self.q, Cx::new(1.0, 0.0))
    }
}

/// Intersection of a line and a plane: `x = p·h(q) − q·h(p)`.
///
/// Fails when the line lies in the plane (both evaluations vanish).
pub fn line_plane_intersection(l: &LineP3, h: &PlaneP3) -> Result<PointP3> {
    let hp = h.eval(&l.p);
    let hq = h.eval(&l.q);
    let scale = norm4(&h.0);
    if hp.norm() <= 1e-13 * scale * l.p.norm() && hq.norm() <= 1e-13 * scale * l.q.norm() {
        return Err(Error::DegenerateConfiguration(
            "line lies in the plane; intersection is not a point".into(),
        ));
    }
    Ok(l.p.combine(hq, &l.q, -hp))
}

/// Intersection point of two coplanar lines.
///
/// Solves `a·p1 + b·q1 + c·p2 + d·q2 = 0`; a one-dimensional kernel gives the
/// common point `a·p1 + b·q1`. Skew lines (empty kernel) and identical lines
/// (kernel of dimension ≥ 2) are rejected.
pub fn line_line_intersection(l1: &LineP3, l2: &LineP3) -> Result<PointP3> {
    let rows: Vec<[Cx; 4]> = (0..4)
        .map(|i| [l1.p.0[i], l1.q.0[i], l2.p.0[i], l2.q.0[i]])
        .collect();
    let kernel = kernel_basis(&rows, 1e-10);
    match kernel.len() {
        0 => Err(Error::AuxiliaryDegenerate("lines are skew; no intersection".into())),
        1 => {
            let [a, b, c, d] = kernel[0];
            let x1 = l1.p.combine(a, &l1.q, b);
            let x2 = l2.p.combine(-c, &l2.q, -d);
            // use whichever side has better numerical mass
            let x = if x1.norm() >= x2.norm() { x1 } else { x2 };
            if x.norm() <= 1e-12 {
                return Err(Error::AuxiliaryDegenerate(
                    "line intersection collapsed to the zero vector".into(),
                ));
            }
            Ok(x)
        }
        _ => Err(Error::DegenerateConfiguration(
            "lines coincide; intersection is not a single point".into(),
        )),
    }
}

/// Cross-ratio of four points lying on a carrier line, via span coordinates.
///
/// Parametrization-independent: any two representatives of the carrier give
/// Möbius-related coordinates, and the cross-ratio kills the difference.
/// Points farther than `tolerance` from the carrier are rejected with
/// [`Error::PointOffCarrier`].
pub fn cross_ratio_on_line(
    pts: [&PointP3; 4],
    carrier: &LineP3,
    tolerance: f64,
) -> Result<ProjPoint1> {
    let mut params = Vec::with_capacity(4);
    for x in pts {
        let (t, err) = carrier.parametrize(x);
        if err > tolerance {
            return Err(Error::PointOffCarrier { residual: err });
        }
        params.push(t);
    }
    cross_ratio(&params[0], &params[1], &params[2], &params[3])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(x: [f64; 4]) -> PointP3 {
        PointP3::from_reals(x)
    }

    #[test]
    fn plane_through_points_contains_inputs() {
        let p = rp([1.0, 2.0, -1.0, 0.5]);
        let q = rp([0.0, 1.0, 3.0, -2.0]);
        let r = rp([2.0, 0.0, 1.0, 1.0]);
        let h = plane_through_points(&p, &q, &r).unwrap();
        for x in [&p, &q, &r] {
            assert!(h.residual(x) < 1e-14);
        }
    }

    #[test]
    fn collinear_points_rejected() {
        let p = rp([1.0, 0.0, 0.0, 0.0]);
        let q = rp([0.0, 1.0, 0.0, 0.0]);
        let mid = p.combine(Cx::new(2.0, 0.0), &q, Cx::new(-3.0, 0.0));
        assert!(plane_through_points(&p, &q, &mid).is_err());
    }

    #[test]
    fn point_on_planes_is_dual_to_plane_through_points() {
        let a = PlaneP3([Cx::new(1.0, 0.0), Cx::new(0.0, 0.0), Cx::new(0.0, 0.0), Cx::new(-1.0, 0.0)]);
        let b = PlaneP3([Cx::new(0.0, 0.0), Cx::new(1.0, 0.0), Cx::new(0.0, 0.0), Cx::new(0.0, 0.0)]);
        let c = PlaneP3([Cx::new(0.0, 0.0), Cx::new(0.0, 0.0), Cx::new(1.0, 0.0), Cx::new(0.0, 0.0)]);
        let x = point_on_planes(&a, &b, &c).unwrap();
        for h in [&a, &b, &c] {
            assert!(h.residual(&x) < 1e-14);
        }
        // x should be (1, 0, 0, 1)
        assert!(x.approx_eq(&rp([1.0, 0.0, 0.0, 1.0]), 1e-12));
    }

    #[test]
    fn line_plane_intersection_is_incident_to_both() {
        let l = LineP3::through(rp([1.0, 2.0, 3.0, 4.0]), rp([0.0, -1.0, 1.0, 2.0])).unwrap();
        let h = PlaneP3([Cx::new(1.0, 0.0), Cx::new(1.0, 0.0), Cx::new(-1.0, 0.0), Cx::new(0.5, 0.0)]);
        let x = line_plane_intersection(&l, &h).unwrap();
        assert!(h.residual(&x) < 1e-13);
        assert!(l.contains(&x, 1e-12));
    }

    #[test]
    fn line_line_intersection_of_coplanar_lines() {
        // two lines in the plane x3 = 0 meeting at (1,1,1,0)
        let m = rp([1.0, 1.0, 1.0, 0.0]);
        let l1 = LineP3::through(rp([1.0, 0.0, 0.0, 0.0]), m).unwrap();
        let l2 = LineP3::through(rp([0.0, 1.0, 0.0, 0.0]), m).unwrap();
        let x = line_line_intersection(&l1, &l2).unwrap();
        assert!(x.approx_eq(&m, 1e-12));
        // skew case
        let l3 = LineP3::through(rp([0.0, 0.0, 1.0, 0.0]), rp([0.0, 0.0, 0.0, 1.0])).unwrap();
        let l4 = LineP3::through(rp([1.0, 0.0, 0.0, 0.0]), rp([0.0, 1.0, 0.0, 1.0])).unwrap();
        assert!(matches!(
            line_line_intersection(&l3, &l4),
            Err(Error::AuxiliaryDegenerate(_))
        ));
    }

    #[test]
    fn cross_ratio_on_line_matches_affine_parameters() {
        // points p + t·q for t = 1, 2, 3, 4 → cross-ratio −1/3
        let p = rp([1.0, -1.0, 0.5, 2.0]);
        let q = rp([0.0, 1.0, 1.0, -1.0]);
        let carrier = LineP3::through(p, q).unwrap();
        let at = |t: f64| p.combine(Cx::new(1.0, 0.0), &q, Cx::new(t, 0.0));
        let pts = [at(1.0), at(2.0), at(3.0), at(4.0)];
        let v = cross_ratio_on_line([&pts[0], &pts[1], &pts[2], &pts[3]], &carrier, 1e-9)
            .unwrap()
            .value()
            .unwrap();
        assert!((v - Cx::new(-1.0 / 3.0, 0.0)).norm() < 1e-12);

        // independence of the chosen span representatives
        let carrier2 = LineP3::through(at(2.5), at(-1.0)).unwrap();
        let v2 = cross_ratio_on_line([&pts[0], &pts[1], &pts[2], &pts[3]], &carrier2, 1e-9)
            .unwrap()
            .value()
            .unwrap();
        assert!((v - v2).norm() < 1e-12);
    }

    #[test]
    fn off_carrier_points_are_rejected() {
        let carrier = LineP3::through(rp([1.0, 0.0, 0.0, 0.0]), rp([0.0, 1.0, 0.0, 0.0])).unwrap();
        let off = rp([0.0, 0.0, 1.0, 0.0]);
        let on = |t: f64| rp([1.0, t, 0.0, 0.0]);
        let r = cross_ratio_on_line([&on(1.0), &on(2.0), &off, &on(4.0)], &carrier, 1e-9);
        assert!(matches!(r, Err(Error::PointOffCarrier { .. })));
    }
}
