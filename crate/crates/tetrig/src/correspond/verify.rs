//! Aggregated verification of the chain recipes against metric data, vertex
//! relabeling, and the span bookkeeping that extends the four verified
//! recipes to the whole length-side sublattice.

use num_complex::Complex64 as Cx;
use std::f64::consts::PI;

use super::geometry::chain_residual;
use super::recipes::{
    res_f1_edge_recipe, res_f1_face_recipe, res_f2_face_recipe, res_f2_vertex_recipe, ChainReport,
};
use crate::e8lattice::{face_root, AffPoint, LatticeVec};
use crate::error::{Error, Result};
use crate::tetra::{metric_angles_oracle, Geometry, MarkedTetra, MetricSpec, EDGES, FACES};

/// Pattern comparison of one recipe against metric data: the square of the
/// geometric value against the product of squared edge factors the metric
/// predicts (edge lengths for the length-side recipes, dihedral angles for
/// the angle-side ones).
#[derive(Clone, Debug)]
pub struct PatternCheck {
    pub label: &'static str,
    pub value: Cx,
    pub target: Cx,
    pub residual: f64,
}

/// Outcome of replaying all four chain recipes on one metric tetrahedron.
#[derive(Clone, Debug)]
pub struct CorrespondenceReport {
    pub chains: Vec<ChainReport>,
    pub patterns: Vec<PatternCheck>,
}

impl CorrespondenceReport {
    /// Worst residual over all chains (head comparisons, links, and
    /// incidences alike).
    pub fn worst_chain(&self) -> f64 {
        self.chains.iter().map(ChainReport::worst).fold(0.0, f64::max)
    }

    /// Worst metric-pattern residual.
    pub fn worst_pattern(&self) -> f64 {
        self.patterns.iter().map(|p| p.residual).fold(0.0, f64::max)
    }

    /// Whether every recorded residual is at or below `tolerance`.
    pub fn holds(&self, tolerance: f64) -> bool {
        self.worst_chain() <= tolerance && self.worst_pattern() <= tolerance
    }
}

/// Run all four chain recipes on the tetrahedron of a metric and compare
/// their squared values against the metric's own predictions.
///
/// The squared geometric value of a half-sum recipe is the product of the
/// three displayed edge values of its support, so it must reproduce
/// `∏ e^{2l}` (hyperbolic lengths), `∏ e^{2il}` (spherical lengths), or
/// `∏ e^{2i(π−α)}` (dihedral angles) over the recipe's three edges —
/// independently of any lift sign choices.
pub fn verify_correspondence(spec: &MetricSpec) -> Result<CorrespondenceReport> {
    let t = MarkedTetra::from_metric(spec)?;
    let alphas = metric_angles_oracle(spec)?;
    let chains = vec![
        res_f1_face_recipe(&t)?,
        res_f1_edge_recipe(&t)?,
        res_f2_vertex_recipe(&t)?,
        res_f2_face_recipe(&t)?,
    ];

    let length_target = |e: usize| -> Cx {
        match spec.geometry {
            Geometry::Hyperbolic => Cx::new((2.0 * spec.lengths[e]).exp(), 0.0),
            Geometry::Spherical => (Cx::i() * 2.0 * spec.lengths[e]).exp(),
        }
    };
    let angle_target = |e: usize| -> Cx { (Cx::i() * 2.0 * (PI - alphas[e])).exp() };

    let cases: [(&'static str, usize, [usize; 3], bool); 4] = [
        ("squared far-face value vs length product", 0, [3, 4, 5], false),
        ("squared near-face value vs length product", 1, [0, 1, 3], false),
        ("squared vertex-star value vs angle product", 2, [0, 1, 2], true),
        ("squared face-star value vs angle product", 3, [2, 4, 5], true),
    ];
    let mut patterns = Vec::with_capacity(4);
    for (label, which, edges, is_angle) in cases {
        let value = chains[which].lhs * chains[which].lhs;
        let mut target = Cx::new(1.0, 0.0);
        for e in edges {
            target *= if is_angle { angle_target(e) } else { length_target(e) };
        }
        patterns.push(PatternCheck { label, value, target, residual: chain_residual(value, target) });
    }

    Ok(CorrespondenceReport { chains, patterns })
}

/// Relabel the tetrahedron by a permutation of its four vertex labels:
/// label `i` of the result refers to label `perm[i]` of the input. Face
/// planes and ordered edge points are pulled back accordingly; the quadric,
/// its ruling chart, and the orientation stay fixed, so ruling families
/// keep their handedness.
pub fn relabel(t: &MarkedTetra, perm: [usize; 4]) -> Result<MarkedTetra> {
    let mut seen = [false; 4];
    for &p in &perm {
        if p > 3 || seen[p] {
            return Err(Error::InvalidInput(
                "relabeling requires a permutation of the four vertex labels".into(),
            ));
        }
        seen[p] = true;
    }
    let planes = [
        t.planes()[perm[0]],
        t.planes()[perm[1]],
        t.planes()[perm[2]],
        t.planes()[perm[3]],
    ];
    let filler = (*t.edge_point(0, 1), *t.edge_point(1, 0));
    let mut pairs = [filler; 6];
    for (e, &(i, j)) in EDGES.iter().enumerate() {
        pairs[e] = (*t.edge_point(perm[i], perm[j]), *t.edge_point(perm[j], perm[i]));
    }
    MarkedTetra::assemble(t.quadric().clone(), planes, t.orientation(), pairs)
}

/// Integer coordinates of a length-side vector over the standard spanning
/// set: `e_∅`, the six edge basis vectors, and the four face half-sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LengthDecomposition {
    pub empty: i64,
    pub edges: [i64; 6],
    pub faces: [i64; 4],
}

impl LengthDecomposition {
    /// Rebuild the decomposed vector.
    pub fn reconstruct(&self) -> LatticeVec {
        let mut v = LatticeVec::basis(AffPoint::Empty) * self.empty;
        for (e, &(i, j)) in EDGES.iter().enumerate() {
            v = v + LatticeVec::basis(AffPoint::pair(i as u8 + 1, j as u8 + 1)) * self.edges[e];
        }
        for (f, &(i, j, k)) in FACES.iter().enumerate() {
            v = v + face_root(i as u8 + 1, j as u8 + 1, k as u8 + 1) * self.faces[f];
        }
        v
    }
}

/// Express a vector of the length-side sublattice (everything orthogonal to
/// `e_{1234}`) over the spanning set of [`LengthDecomposition`].
///
/// The odd-parity pattern of the doubled coordinates is a four-term word:
/// either a face support, handled by one face half-sum, or a closed-walk
/// support, handled by the two face half-sums through one of its missing
/// edges. The even remainder is read off coordinate by coordinate.
pub fn decompose_length_domain(v: &LatticeVec) -> Result<LengthDecomposition> {
    if v.inner(&LatticeVec::basis(AffPoint::Full)) != 0 {
        return Err(Error::VectorNotInDomain {
            vector: v.doubled(),
            domain: "length-side sublattice",
        });
    }

    let d = v.doubled();
    let support: [bool; 8] = core::array::from_fn(|s| d[s].rem_euclid(2) == 1);
    let mut faces = [0i64; 4];
    if support.iter().any(|&b| b) {
        let mut matched = false;
        for (f, &(i, j, k)) in FACES.iter().enumerate() {
            let fr = face_root(i as u8 + 1, j as u8 + 1, k as u8 + 1).doubled();
            if (0..8).all(|s| (fr[s].rem_euclid(2) == 1) == support[s]) {
                faces[f] = 1;
                matched = true;
                break;
            }
        }
        if !matched {
            // closed-walk support: e_∅ is even and exactly two edge slots
            // are missing; the two faces through the first missing edge
            // restore even parity everywhere
            let missing: Vec<usize> = (0..6).filter(|&e| !support[1 + e]).collect();
            if support[0] || missing.len() != 2 {
                return Err(Error::ConsistencyFailure(
                    "length-side parity pattern is not a face or walk support".into(),
                ));
            }
            let (i, j) = EDGES[missing[0]];
            for (f, &(a, b, c)) in FACES.iter().enumerate() {
                if [a, b, c].contains(&i) && [a, b, c].contains(&j) {
                    faces[f] = 1;
                }
            }
        }
    }

    let mut rest = *v;
    for (f, &(i, j, k)) in FACES.iter().enumerate() {
        rest = rest - face_root(i as u8 + 1, j as u8 + 1, k as u8 + 1) * faces[f];
    }
    let dr = rest.doubled();
    if dr.iter().any(|c| c.rem_euclid(2) != 0) || dr[7] != 0 {
        return Err(Error::ConsistencyFailure(
            "length-side parity reduction left an odd remainder".into(),
        ));
    }
    let dec = LengthDecomposition {
        empty: dr[0] / 2,
        edges: core::array::from_fn(|e| dr[1 + e] / 2),
        faces,
    };
    if dec.reconstruct() != *v {
        return Err(Error::ConsistencyFailure(
            "length-side decomposition failed to reconstruct its input".into(),
        ));
    }
    Ok(dec)
}

/// Evaluate the length character at `v` purely geometrically: face
/// half-sums through (suitably relabeled) chain recipes, edge vectors
/// through displayed edge cross-ratios, and `e_∅` as 1.
pub fn geometric_length_value(t: &MarkedTetra, v: &LatticeVec) -> Result<Cx> {
    let dec = decompose_length_domain(v)?;
    let mut out = Cx::new(1.0, 0.0);
    for (e, &(i, j)) in EDGES.iter().enumerate() {
        if dec.edges[e] != 0 {
            out *= t.edge_cross_ratio(i, j)?.powi(dec.edges[e] as i32);
        }
    }
    for (f, &(i, j, k)) in FACES.iter().enumerate() {
        if dec.faces[f] != 0 {
            // pull the face into position {2,3,4} and run the face recipe
            let omitted = 6 - i - j - k;
            let rep = res_f1_face_recipe(&relabel(t, [omitted, i, j, k])?)?;
            out *= rep.lhs.powi(dec.faces[f] as i32);
        }
    }
    Ok(out)
}

/// All sign patterns of the four face half-sums: the sixty-four vectors
/// `(±e_ij ± e_ik ± e_jk ± e_∅)/2`. Each is a root of the length-side
/// system, and together they generate the same sublattice as the spanning
/// set of [`LengthDecomposition`].
pub fn sign_family_generators() -> Vec<LatticeVec> {
    let mut out = Vec::with_capacity(64);
    for &(i, j, k) in FACES.iter() {
        let pts = [
            AffPoint::pair(i as u8 + 1, j as u8 + 1),
            AffPoint::pair(i as u8 + 1, k as u8 + 1),
            AffPoint::pair(j as u8 + 1, k as u8 + 1),
            AffPoint::Empty,
        ];
        for mask in 0..16u32 {
            let signs = core::array::from_fn(|b| if mask & (1 << b) == 0 { 1i64 } else { -1 });
            out.push(LatticeVec::half_sum(pts, signs));
        }
    }
    out
}
