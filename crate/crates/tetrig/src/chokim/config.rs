//! Ordered eight-point configurations on `P¹` and their projective
//! comparison.
//!
//! The entry order is fixed once and for all: a basepoint, then the four
//! face values (faces `123, 124, 134, 234`), then the three closed-walk
//! values (walks `1234, 1324, 1243`). Two routes produce a configuration —
//! metric sums (perimeters or angle sums) and character values on
//! distinguished lattice vectors — and the whole point of the machinery is
//! that the two configurations attached to one tetrahedron are projectively
//! equivalent.

use num_complex::Complex64 as Cx;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{CYCLE_EDGES, FACE_EDGES, OPPOSITE_STAR_EDGES};
use crate::e8lattice::{cycle_roots, face_roots, star_roots};
use crate::error::{Error, Result};
use crate::projgeom::{cross_ratio, mobius_through, MobiusMap, ProjPoint1};
use crate::tetra::{metric_angles_oracle, CharacterHom, Geometry, MetricSpec, SubLattice};
use crate::tol;

/// Which metric quantity a configuration is assembled from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MetricConfig {
    /// Face perimeter sums and closed-walk length sums.
    Perimeters,
    /// Solid-angle sums (dihedral angles at the opposite vertex, minus π)
    /// and closed-walk angle sums.
    SolidAngles,
}

/// An ordered configuration of eight points of `P¹`: basepoint, four face
/// values, three closed-walk values. Entries may legitimately be `∞`, though
/// every configuration built from metric data or a character is finite.
#[derive(Clone, Debug)]
pub struct Config8 {
    points: [ProjPoint1; 8],
}

impl Config8 {
    /// Assemble from homogeneous entries.
    pub fn new(points: [ProjPoint1; 8]) -> Config8 {
        Config8 { points }
    }

    /// Assemble from finite complex entries.
    pub fn from_values(values: [Cx; 8]) -> Config8 {
        Config8 {
            points: values.map(ProjPoint1::from_value),
        }
    }

    /// The `k`-th entry as a point of `P¹`.
    pub fn point(&self, k: usize) -> &ProjPoint1 {
        &self.points[k]
    }

    /// All eight entries.
    pub fn points(&self) -> &[ProjPoint1; 8] {
        &self.points
    }

    /// The `k`-th entry as a finite value, or `None` for `∞`.
    pub fn value(&self, k: usize) -> Option<Cx> {
        self.points[k].value()
    }

    /// All eight entries as finite values; fails if any entry is `∞`.
    pub fn finite_values(&self) -> Result<[Cx; 8]> {
        let mut out = [Cx::new(0.0, 0.0); 8];
        for (k, p) in self.points.iter().enumerate() {
            out[k] = p.value().ok_or_else(|| {
                Error::DegenerateConfiguration(format!("configuration entry {k} is ∞"))
            })?;
        }
        Ok(out)
    }
}

/// On-the-wire entry: a finite complex number or the point at infinity.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WireEntry {
    Finite { re: f64, im: f64 },
    Infinity { inf: bool },
}

impl Serialize for Config8 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let wire: Vec<WireEntry> = self
            .points
            .iter()
            .map(|p| match p.value() {
                Some(v) => WireEntry::Finite { re: v.re, im: v.im },
                None => WireEntry::Infinity { inf: true },
            })
            .collect();
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Config8 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire: Vec<WireEntry> = Vec::deserialize(deserializer)?;
        if wire.len() != 8 {
            return Err(D::Error::custom(format!(
                "configuration needs exactly 8 entries, got {}",
                wire.len()
            )));
        }
        let mut points = [ProjPoint1::from_real(0.0); 8];
        for (k, w) in wire.into_iter().enumerate() {
            points[k] = match w {
                WireEntry::Finite { re, im } => ProjPoint1::from_value(Cx::new(re, im)),
                WireEntry::Infinity { inf: true } => ProjPoint1::new(
                    Cx::new(1.0, 0.0),
                    Cx::new(0.0, 0.0),
                ),
                WireEntry::Infinity { inf: false } => {
                    return Err(D::Error::custom("\"inf\": false is not a point"))
                }
            };
        }
        Ok(Config8 { points })
    }
}

/// Build the metric configuration of a realizable tetrahedron.
///
/// For [`MetricConfig::Perimeters`] the entries are exponentials of the four
/// face perimeters and the three closed-walk length sums: `e^{iΠ}` on the
/// sphere, real `e^{Π}` in hyperbolic space, always with basepoint 1.
///
/// For [`MetricConfig::SolidAngles`] the entries are `e^{iΩ}` where each
/// face contributes the sum of the dihedral angles at its opposite vertex
/// minus π, and each closed walk contributes its angle sum. The six dihedral
/// angles are taken from `angles` when provided (in edge order `12, 13, 14,
/// 23, 24, 34`) and computed from the metric otherwise.
pub fn config_metric(
    spec: &MetricSpec,
    which: MetricConfig,
    angles: Option<&[f64; 6]>,
) -> Result<Config8> {
    // Realizability gate: both configurations describe an actual tetrahedron.
    spec.vertex_embedding()?;
    let mut values = [Cx::new(1.0, 0.0); 8];
    match which {
        MetricConfig::Perimeters => {
            let l = &spec.lengths;
            for (f, edges) in FACE_EDGES.iter().enumerate() {
                let sum: f64 = edges.iter().map(|&e| l[e]).sum();
                values[1 + f] = perimeter_entry(spec.geometry, sum);
            }
            for (c, edges) in CYCLE_EDGES.iter().enumerate() {
                let sum: f64 = edges.iter().map(|&e| l[e]).sum();
                values[5 + c] = perimeter_entry(spec.geometry, sum);
            }
        }
        MetricConfig::SolidAngles => {
            let computed;
            let alpha = match angles {
                Some(a) => a,
                None => {
                    computed = metric_angles_oracle(spec)?;
                    &computed
                }
            };
            for (f, edges) in OPPOSITE_STAR_EDGES.iter().enumerate() {
                let sum: f64 = edges.iter().map(|&e| alpha[e]).sum();
                values[1 + f] = Cx::new(0.0, sum - std::f64::consts::PI).exp();
            }
            for (c, edges) in CYCLE_EDGES.iter().enumerate() {
                let sum: f64 = edges.iter().map(|&e| alpha[e]).sum();
                values[5 + c] = Cx::new(0.0, sum).exp();
            }
        }
    }
    Ok(Config8::from_values(values))
}

fn perimeter_entry(geometry: Geometry, sum: f64) -> Cx {
    match geometry {
        Geometry::Spherical => Cx::new(0.0, sum).exp(),
        Geometry::Hyperbolic => Cx::new(sum.exp(), 0.0),
    }
}

/// Build the configuration of character values.
///
/// For a length-side character the entries are the values on the four face
/// roots and the three cycle roots. For an angle-side character they are the
/// values on the *negated* star roots of the opposite vertices and the
/// negated cycle roots — the sign under which metric input reproduces the
/// solid-angle configuration (the star-root value itself is the reciprocal
/// `e^{-iΩ}`).
pub fn config_from_hom(h: &CharacterHom) -> Result<Config8> {
    let mut values = [Cx::new(1.0, 0.0); 8];
    match h.tag() {
        SubLattice::E7L => {
            for (f, root) in face_roots().iter().enumerate() {
                values[1 + f] = h.eval(root)?;
            }
            for (c, root) in cycle_roots().iter().enumerate() {
                values[5 + c] = h.eval(root)?;
            }
        }
        SubLattice::E7A => {
            let stars = star_roots();
            // Face `ijk` reads the star of its omitted vertex: 4, 3, 2, 1.
            for (f, &vertex) in [3usize, 2, 1, 0].iter().enumerate() {
                values[1 + f] = h.eval(&-stars[vertex])?;
            }
            for (c, root) in cycle_roots().iter().enumerate() {
                values[5 + c] = h.eval(&-*root)?;
            }
        }
    }
    Ok(Config8::from_values(values))
}

/// Cross-ratio `[z₁, z₂, z₃, z₄]` of the four face entries, the projective
/// invariant shared by the two metric configurations of one tetrahedron.
pub fn cross_ratio_invariant(c: &Config8) -> Result<Cx> {
    let faces = [c.point(1), c.point(2), c.point(3), c.point(4)];
    for a in 0..4 {
        for b in (a + 1)..4 {
            if faces[a].chordal(faces[b]) < tol::PROJ_EQ {
                return Err(Error::DegenerateConfiguration(format!(
                    "face entries {} and {} coincide",
                    a + 1,
                    b + 1
                )));
            }
        }
    }
    let cr = cross_ratio(faces[0], faces[1], faces[2], faces[3])?;
    cr.value().ok_or_else(|| {
        Error::DegenerateConfiguration("face cross-ratio is ∞".into())
    })
}

/// Find the Möbius map sending one configuration to the other entrywise.
///
/// The map is anchored on the index triple that is best-separated in *both*
/// configurations simultaneously and then verified on the remaining five
/// entries; `tolerance` bounds the admissible chordal residual.
pub fn projective_equivalence(
    c1: &Config8,
    c2: &Config8,
    tolerance: f64,
) -> Result<MobiusMap> {
    for c in [c1, c2] {
        if distinct_count(c) < 3 {
            return Err(Error::TooDegenerate);
        }
    }
    // Pick anchors by maximizing the worst pairwise separation across both
    // configurations: a nearly-collapsed anchor triple would make the
    // interpolation ill-conditioned even when a good triple exists.
    let mut best: Option<([usize; 3], f64)> = None;
    for i in 0..8 {
        for j in (i + 1)..8 {
            for k in (j + 1)..8 {
                let sep = [(i, j), (i, k), (j, k)]
                    .iter()
                    .map(|&(a, b)| {
                        c1.point(a)
                            .chordal(c1.point(b))
                            .min(c2.point(a).chordal(c2.point(b)))
                    })
                    .fold(f64::INFINITY, f64::min);
                if best.map_or(true, |(_, s)| sep > s) {
                    best = Some(([i, j, k], sep));
                }
            }
        }
    }
    let ([i, j, k], sep) = best.expect("56 candidate triples");
    if sep < tol::PROJ_EQ {
        // Each configuration has three distinct points, but never at a
        // common index triple — no entrywise bijection can exist.
        return Err(Error::NotEquivalent {
            residual: f64::INFINITY,
        });
    }
    let m = mobius_through(
        &[*c1.point(i), *c1.point(j), *c1.point(k)],
        &[*c2.point(i), *c2.point(j), *c2.point(k)],
    )?;
    let residual = (0..8)
        .map(|n| m.apply(c1.point(n)).chordal(c2.point(n)))
        .fold(0.0, f64::max);
    if residual > tolerance {
        return Err(Error::NotEquivalent { residual });
    }
    Ok(m)
}

fn distinct_count(c: &Config8) -> usize {
    let mut reps: Vec<&ProjPoint1> = Vec::new();
    for p in c.points() {
        if reps.iter().all(|r| r.chordal(p) > tol::PROJ_EQ) {
            reps.push(p);
        }
    }
    reps.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tetra::{angle_function, length_function, MarkedTetra};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn all_right() -> MetricSpec {
        MetricSpec::new(Geometry::Spherical, [std::f64::consts::FRAC_PI_2; 6])
    }

    fn hyp_spec() -> MetricSpec {
        MetricSpec::new(Geometry::Hyperbolic, [0.7, 0.9, 1.1, 1.3, 0.8, 1.2])
    }

    fn sph_spec() -> MetricSpec {
        MetricSpec::new(Geometry::Spherical, [0.83, 0.91, 1.07, 1.19, 0.88, 1.02])
    }

    fn assert_close(a: Cx, b: Cx, tolerance: f64, ctx: &str) {
        assert!(
            (a - b).norm() <= tolerance * (1.0 + a.norm().max(b.norm())),
            "{ctx}: {a} vs {b}"
        );
    }

    /// All dihedral angles π/2 ⇒ every face entry is `e^{i(3π/2 − π)} = i`
    /// and every walk entry is `e^{2πi} = 1`.
    #[test]
    fn all_right_solid_angle_entries_are_i_and_one() {
        let c = config_metric(&all_right(), MetricConfig::SolidAngles, None).unwrap();
        for f in 1..5 {
            assert_close(c.value(f).unwrap(), Cx::new(0.0, 1.0), tol::EXACT_CASE, "face");
        }
        for w in 5..8 {
            assert_close(c.value(w).unwrap(), Cx::new(1.0, 0.0), tol::EXACT_CASE, "walk");
        }
    }

    /// All edge lengths π/2 ⇒ perimeters are `3·π/2` (entry `−i`) and walk
    /// sums are `4·π/2 = 2π` (entry 1).
    #[test]
    fn all_right_perimeter_entries_follow_the_sums() {
        let c = config_metric(&all_right(), MetricConfig::Perimeters, None).unwrap();
        for f in 1..5 {
            assert_close(c.value(f).unwrap(), Cx::new(0.0, -1.0), tol::EXACT_CASE, "face");
        }
        for w in 5..8 {
            assert_close(c.value(w).unwrap(), Cx::new(1.0, 0.0), tol::EXACT_CASE, "walk");
        }
    }

    /// Hyperbolic perimeter entries are real exponentials of positive sums.
    #[test]
    fn hyperbolic_perimeter_entries_are_real_and_exceed_one() {
        let c = config_metric(&hyp_spec(), MetricConfig::Perimeters, None).unwrap();
        for k in 1..8 {
            let v = c.value(k).unwrap();
            assert!(v.im.abs() < 1e-15 && v.re > 1.0, "entry {k} = {v}");
        }
    }

    /// The character route and the metric route produce the same
    /// configurations, on both sides and in both geometries.
    #[test]
    fn character_route_matches_metric_route() {
        for spec in [hyp_spec(), sph_spec()] {
            let t = MarkedTetra::from_metric(&spec).unwrap();
            let from_l = config_from_hom(&length_function(&t).unwrap()).unwrap();
            let metric_l = config_metric(&spec, MetricConfig::Perimeters, None).unwrap();
            let from_a = config_from_hom(&angle_function(&t).unwrap()).unwrap();
            let metric_a = config_metric(&spec, MetricConfig::SolidAngles, None).unwrap();
            for k in 0..8 {
                assert_close(
                    from_l.value(k).unwrap(),
                    metric_l.value(k).unwrap(),
                    tol::CROSS_RATIO,
                    &format!("{:?} length entry {k}", spec.geometry),
                );
                assert_close(
                    from_a.value(k).unwrap(),
                    metric_a.value(k).unwrap(),
                    tol::CROSS_RATIO,
                    &format!("{:?} angle entry {k}", spec.geometry),
                );
            }
        }
    }

    #[test]
    fn trivial_character_gives_the_all_ones_configuration() {
        let one = Cx::new(1.0, 0.0);
        for tag in [SubLattice::E7L, SubLattice::E7A] {
            let c = config_from_hom(&CharacterHom::new(tag, [one; 8])).unwrap();
            for k in 0..8 {
                assert_close(c.value(k).unwrap(), one, 0.0, "entry");
            }
        }
    }

    /// The face cross-ratio agrees between the two metric configurations.
    #[test]
    fn face_cross_ratio_agrees_between_the_two_sides() {
        for spec in [hyp_spec(), sph_spec()] {
            let pi = config_metric(&spec, MetricConfig::Perimeters, None).unwrap();
            let om = config_metric(&spec, MetricConfig::SolidAngles, None).unwrap();
            let a = cross_ratio_invariant(&pi).unwrap();
            let b = cross_ratio_invariant(&om).unwrap();
            assert_close(a, b, tol::CROSS_RATIO, "invariant");
        }
    }

    #[test]
    fn coincident_face_entries_are_rejected() {
        let c = config_metric(&all_right(), MetricConfig::SolidAngles, None).unwrap();
        assert!(matches!(
            cross_ratio_invariant(&c),
            Err(Error::DegenerateConfiguration(_))
        ));
    }

    fn random_config(rng: &mut StdRng) -> Config8 {
        Config8::from_values(std::array::from_fn(|_| {
            Cx::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
        }))
    }

    fn random_mobius(rng: &mut StdRng) -> MobiusMap {
        loop {
            let m = MobiusMap {
                a: Cx::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                b: Cx::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                c: Cx::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                d: Cx::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
            };
            if m.det().norm() > 0.1 {
                return m;
            }
        }
    }

    #[test]
    fn equivalence_recovers_a_random_mobius_map() {
        let mut rng = StdRng::seed_from_u64(21);
        for _ in 0..20 {
            let c1 = random_config(&mut rng);
            let m = random_mobius(&mut rng);
            let c2 = Config8::new(std::array::from_fn(|k| m.apply(c1.point(k))));
            let found = projective_equivalence(&c1, &c2, tol::CHAIN).unwrap();
            assert!(found.approx_eq(&m, 1e-7), "recovered map differs");
        }
    }

    #[test]
    fn equivalence_holds_between_the_metric_configurations() {
        for spec in [hyp_spec(), sph_spec()] {
            let pi = config_metric(&spec, MetricConfig::Perimeters, None).unwrap();
            let om = config_metric(&spec, MetricConfig::SolidAngles, None).unwrap();
            let m = projective_equivalence(&pi, &om, tol::CHAIN).unwrap();
            for k in 0..8 {
                assert!(m.apply(pi.point(k)).chordal(om.point(k)) < tol::CHAIN);
            }
        }
    }

    #[test]
    fn swapping_two_entries_breaks_equivalence() {
        let mut rng = StdRng::seed_from_u64(22);
        let c1 = random_config(&mut rng);
        let m = random_mobius(&mut rng);
        let mut images: [ProjPoint1; 8] = std::array::from_fn(|k| m.apply(c1.point(k)));
        images.swap(2, 6);
        let c2 = Config8::new(images);
        assert!(matches!(
            projective_equivalence(&c1, &c2, tol::CHAIN),
            Err(Error::NotEquivalent { .. })
        ));
    }

    #[test]
    fn configurations_with_two_points_are_too_degenerate() {
        let z = Cx::new(2.0, 1.0);
        let o = Cx::new(1.0, 0.0);
        let c = Config8::from_values([o, z, z, z, z, o, o, o]);
        let other = config_metric(&hyp_spec(), MetricConfig::Perimeters, None).unwrap();
        assert!(matches!(
            projective_equivalence(&c, &other, tol::CHAIN),
            Err(Error::TooDegenerate)
        ));
    }

    #[test]
    fn serialization_round_trips_including_infinity() {
        let mut points: [ProjPoint1; 8] = std::array::from_fn(|k| {
            ProjPoint1::from_value(Cx::new(k as f64, -(k as f64) / 3.0))
        });
        points[5] = ProjPoint1::new(Cx::new(1.0, 0.0), Cx::new(0.0, 0.0));
        let c = Config8::new(points);
        let json = serde_json::to_string(&c).unwrap();
        assert!(json.contains("\"inf\":true"));
        let back: Config8 = serde_json::from_str(&json).unwrap();
        for k in 0..8 {
            assert!(c.point(k).chordal(back.point(k)) < 1e-12);
        }
    }
}
