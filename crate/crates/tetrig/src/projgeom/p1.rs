//! The complex projective line: homogeneous points, cross-ratios, and Möbius
//! maps.

use serde::{Deserialize, Serialize};

use super::{proportional, Cx};
use crate::error::{Error, Result};

/// A point of `P¹` in homogeneous coordinates `(z0 : z1)`; the affine value
/// is `z0/z1` and `∞ = (1 : 0)`.
///
/// All arithmetic stays homogeneous so poles need no special cases; convert
/// with [`ProjPoint1::value`] only at the boundary.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct ProjPoint1 {
    pub z0: Cx,
    pub z1: Cx,
}

impl ProjPoint1 {
    /// The point at infinity `(1 : 0)`.
    pub const INFINITY: ProjPoint1 = ProjPoint1 {
        z0: Cx::new(1.0, 0.0),
        z1: Cx::new(0.0, 0.0),
    };

    /// Homogeneous constructor.
    pub fn new(z0: Cx, z1: Cx) -> ProjPoint1 {
        debug_assert!(
            z0.norm() + z1.norm() > 0.0,
            "(0 : 0) is not a projective point"
        );
        ProjPoint1 { z0, z1 }
    }

    /// Finite affine point `t = (t : 1)`.
    pub fn from_value(t: Cx) -> ProjPoint1 {
        ProjPoint1::new(t, Cx::new(1.0, 0.0))
    }

    /// Finite real point.
    pub fn from_real(t: f64) -> ProjPoint1 {
        ProjPoint1::from_value(Cx::new(t, 0.0))
    }

    /// Affine value, or `None` at infinity (|z1| below chordal floor).
    pub fn value(&self) -> Option<Cx> {
        if self.is_infinity() {
            None
        } else {
            Some(self.z0 / self.z1)
        }
    }

    /// Is this the point at infinity (up to tolerance relative to the
    /// coordinate scale)?
    pub fn is_infinity(&self) -> bool {
        self.z1.norm() <= 1e-14 * self.z0.norm()
    }

    /// Chordal distance on the Riemann sphere:
    /// `|p ∧ q| / (‖p‖·‖q‖) ∈ [0, 1]`. Zero exactly on projective equality.
    pub fn chordal(&self, other: &ProjPoint1) -> f64 {
        let wedge = (self.z0 * other.z1 - other.z0 * self.z1).norm();
        let np = (self.z0.norm_sqr() + self.z1.norm_sqr()).sqrt();
        let nq = (other.z0.norm_sqr() + other.z1.norm_sqr()).sqrt();
        wedge / (np * nq)
    }

    /// Projective equality with explicit tolerance.
    pub fn approx_eq(&self, other: &ProjPoint1, tolerance: f64) -> bool {
        proportional(&[self.z0, self.z1], &[other.z0, other.z1], tolerance)
    }
}

/// Homogenized difference `a − b`: the resultant `a0·b1 − b0·a1`, which
/// degenerates to the affine difference when both points are finite with
/// `z1 = 1`.
fn wedge(a: &ProjPoint1, b: &ProjPoint1) -> Cx {
    a.z0 * b.z1 - b.z0 * a.z1
}

/// Cross-ratio `[z1, z2; z3, z4] = (z1−z2)(z3−z4) / ((z1−z4)(z3−z2))`,
/// computed homogeneously and returned as a point of `P¹` (so the value may
/// legitimately be `∞`).
///
/// Fails with [`Error::DegenerateConfiguration`] only when numerator and
/// denominator vanish together (a genuine 0/0, e.g. three coincident
/// points).
pub fn cross_ratio(
    z1: &ProjPoint1,
    z2: &ProjPoint1,
    z3: &ProjPoint1,
    z4: &ProjPoint1,
) -> Result<ProjPoint1> {
    let num = wedge(z1, z2) * wedge(z3, z4);
    let den = wedge(z1, z4) * wedge(z3, z2);
    // scale of the wedge products relative to which "zero" is judged
    let norms: [f64; 4] = [z1, z2, z3, z4].map(|z| (z.z0.norm_sqr() + z.z1.norm_sqr()).sqrt());
    let scale = norms[0] * norms[1] * norms[2] * norms[3];
    if num.norm() <= 1e-14 * scale && den.norm() <= 1e-14 * scale {
        return Err(Error::DegenerateConfiguration(
            "cross-ratio is 0/0 (three or more coincident points)".into(),
        ));
    }
    Ok(ProjPoint1::new(num, den))
}

/// A Möbius transformation as a 2×2 complex matrix `[[a, b], [c, d]]` up to
/// scale, acting on homogeneous coordinates (affine form
/// `t ↦ (a·t + b)/(c·t + d)`).
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct MobiusMap {
    pub a: Cx,
    pub b: Cx,
    pub c: Cx,
    pub d: Cx,
}

impl MobiusMap {
    /// The identity map.
    pub fn identity() -> MobiusMap {
        MobiusMap {
            a: Cx::new(1.0, 0.0),
            b: Cx::new(0.0, 0.0),
            c: Cx::new(0.0, 0.0),
            d: Cx::new(1.0, 0.0),
        }
    }

    /// Determinant `ad − bc`.
    pub fn det(&self) -> Cx {
        self.a * self.d - self.b * self.c
    }

    /// Apply to a homogeneous point.
    pub fn apply(&self, p: &ProjPoint1) -> ProjPoint1 {
        ProjPoint1::new(self.a * p.z0 + self.b * p.z1, self.c * p.z0 + self.d * p.z1)
    }

    /// Apply to a finite value (result may be `∞`).
    pub fn apply_value(&self, t: Cx) -> ProjPoint1 {
        self.apply(&ProjPoint1::from_value(t))
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &MobiusMap) -> MobiusMap {
        MobiusMap {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    /// Projective inverse (adjugate matrix — no determinant division needed).
    pub fn inverse(&self) -> MobiusMap {
        MobiusMap {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Scale-normalize for stable printing: det = 1 with the principal square
    /// root, then the lexicographically first entry of non-negligible
    /// magnitude is rotated to be real positive. Projectively a no-op.
    pub fn normalize(&self) -> MobiusMap {
        let det = self.det();
        debug_assert!(det.norm() > 0.0, "singular Möbius matrix");
        let s = det.sqrt();
        let mut m = MobiusMap {
            a: self.a / s,
            b: self.b / s,
            c: self.c / s,
            d: self.d / s,
        };
        let entries = [m.a, m.b, m.c, m.d];
        let scale = entries.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if let Some(lead) = entries.iter().find(|z| z.norm() > 0.5 * scale) {
            let phase = lead / lead.norm();
            m = MobiusMap {
                a: m.a / phase,
                b: m.b / phase,
                c: m.c / phase,
                d: m.d / phase,
            };
        }
        m
    }

    /// Projective equality with explicit tolerance.
    pub fn approx_eq(&self, other: &MobiusMap, tolerance: f64) -> bool {
        proportional(
            &[self.a, self.b, self.c, self.d],
            &[other.a, other.b, other.c, other.d],
            tolerance,
        )
    }
}

/// The unique Möbius map sending `src[k] ↦ dst[k]` for three pairwise
/// distinct sources and three pairwise distinct targets.
///
/// Built as `N_dst⁻¹ ∘ N_src` where `N_triple` is the classical map of a
/// triple to `(0, 1, ∞)`.
pub fn mobius_through(src: &[ProjPoint1; 3], dst: &[ProjPoint1; 3]) -> Result<MobiusMap> {
    fn to_standard(t: &[ProjPoint1; 3]) -> Result<MobiusMap> {
        // t ↦ [ (t−p)·(q−r) : (t−r)·(q−p) ] sends p↦0, q↦1, r↦∞
        let [p, q, r] = t;
        for (x, y) in [(p, q), (q, r), (p, r)] {
            if x.chordal(y) < 1e-12 {
                return Err(Error::DegenerateTriple);
            }
        }
        let s1 = wedge(q, r);
        let s2 = wedge(q, p);
        Ok(MobiusMap {
            a: p.z1 * s1,
            b: -p.z0 * s1,
            c: r.z1 * s2,
            d: -r.z0 * s2,
        })
    }
    let ns = to_standard(src)?;
    let nd = to_standard(dst)?;
    Ok(nd.inverse().compose(&ns))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(t: f64) -> ProjPoint1 {
        ProjPoint1::from_real(t)
    }

    fn value(r: Result<ProjPoint1>) -> Cx {
        r.unwrap().value().expect("finite value")
    }

    #[test]
    fn cross_ratio_of_1234_is_minus_one_third() {
        let v = value(cross_ratio(&p(1.0), &p(2.0), &p(3.0), &p(4.0)));
        assert!((v - Cx::new(-1.0 / 3.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn cross_ratio_with_infinity_matches_limit() {
        let v = value(cross_ratio(&p(0.0), &p(1.0), &ProjPoint1::INFINITY, &p(2.0)));
        assert!((v - Cx::new(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn cross_ratio_symmetries() {
        let zs = [p(0.3), p(-1.7), p(2.9), p(7.1)];
        let a = value(cross_ratio(&zs[0], &zs[1], &zs[2], &zs[3]));
        let swapped = value(cross_ratio(&zs[2], &zs[3], &zs[0], &zs[1]));
        assert!((a - swapped).norm() < 1e-14, "pair swap must preserve the value");
        let inv = value(cross_ratio(&zs[0], &zs[3], &zs[2], &zs[1]));
        assert!((a * inv - Cx::new(1.0, 0.0)).norm() < 1e-14, "swapping 2↔4 inverts");
    }

    #[test]
    fn cross_ratio_detects_zero_over_zero() {
        let q = p(1.0);
        assert!(matches!(
            cross_ratio(&q, &q, &q, &p(2.0)),
            Err(Error::DegenerateConfiguration(_))
        ));
    }

    #[test]
    fn mobius_through_standard_triples() {
        let std3 = [p(0.0), p(1.0), ProjPoint1::INFINITY];
        let id = mobius_through(&std3, &std3).unwrap();
        assert!(id.approx_eq(&MobiusMap::identity(), 1e-12));

        let m = mobius_through(&std3, &[p(1.0), p(0.0), ProjPoint1::INFINITY]).unwrap();
        // t ↦ 1 − t
        let img = m.apply_value(Cx::new(0.25, 0.0)).value().unwrap();
        assert!((img - Cx::new(0.75, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn mobius_inverse_composes_to_identity() {
        let m = MobiusMap {
            a: Cx::new(1.0, 2.0),
            b: Cx::new(0.0, -1.0),
            c: Cx::new(3.0, 0.0),
            d: Cx::new(1.0, 1.0),
        };
        let comp = m.compose(&m.inverse());
        assert!(comp.approx_eq(&MobiusMap::identity(), 1e-12));
        for k in 0..10 {
            let t = Cx::new(0.37 * k as f64 - 1.1, 0.21 * k as f64);
            let round = m.inverse().apply(&m.apply_value(t));
            assert!(round.chordal(&ProjPoint1::from_value(t)) < 1e-12);
        }
    }

    #[test]
    fn cross_ratio_is_mobius_invariant() {
        let m = MobiusMap {
            a: Cx::new(2.0, 1.0),
            b: Cx::new(-1.0, 0.5),
            c: Cx::new(0.0, 1.0),
            d: Cx::new(1.0, -2.0),
        };
        let zs = [p(0.4), p(-2.0), ProjPoint1::INFINITY, p(5.5)];
        let before = cross_ratio(&zs[0], &zs[1], &zs[2], &zs[3]).unwrap();
        let imgs: Vec<ProjPoint1> = zs.iter().map(|z| m.apply(z)).collect();
        let after = cross_ratio(&imgs[0], &imgs[1], &imgs[2], &imgs[3]).unwrap();
        assert!(before.approx_eq(&after, 1e-12));
    }

    #[test]
    fn degenerate_triple_is_rejected() {
        let trip = [p(1.0), p(1.0), p(2.0)];
        assert!(matches!(
            mobius_through(&trip, &[p(0.0), p(1.0), p(2.0)]),
            Err(Error::DegenerateTriple)
        ));
    }

    #[test]
    fn normalize_fixes_scale_deterministically() {
        let m = MobiusMap {
            a: Cx::new(0.0, 2.0),
            b: Cx::new(4.0, 0.0),
            c: Cx::new(0.0, 0.0),
            d: Cx::new(0.0, -2.0),
        };
        let n1 = m.normalize();
        let scaled = MobiusMap {
            a: m.a * Cx::new(-3.0, 1.0),
            b: m.b * Cx::new(-3.0, 1.0),
            c: m.c * Cx::new(-3.0, 1.0),
            d: m.d * Cx::new(-3.0, 1.0),
        };
        let n2 = scaled.normalize();
        for (x, y) in [(n1.a, n2.a), (n1.b, n2.b), (n1.c, n2.c), (n1.d, n2.d)] {
            assert!((x - y).norm() < 1e-12, "normalization must kill the scale freedom");
        }
    }
}
