//! The marked projective tetrahedron: quadric, ordered faces, ruling
//! orientation, and ordered edge points, with construction from metric data
//! and the polar-dual tetrahedron.

use num_complex::Complex64 as Cx;
use serde::{Deserialize, Serialize};

use super::lift::{angle_function, length_function};
use super::metric::{metric_angles_oracle, Geometry, MetricSpec};
use super::{edge_index, EDGES, FACES};
use crate::e8lattice::{cycle_root, face_root, star_root, LatticeVec};
use crate::error::{Error, Result};
use crate::projgeom::{
    cross_ratio_on_line, line_line_intersection, plane_through_points, point_on_planes, LineP3,
    PlaneP3, PointP3, QuadricP3, RulingChart, RulingFamily,
};
use crate::tol;

/// For the dual tetrahedron's edge `{k,l}` (in [`EDGES`] order), the ordered
/// source pair `(i,j)` such that `(i,j,k,l)` is an even permutation of
/// `(1,2,3,4)`: the dual edge points on `{k,l}` are the ruling crossings of
/// the original edge points on `{i,j}`.
const DUAL_SRC: [(usize, usize); 6] = [(2, 3), (3, 1), (1, 2), (0, 3), (2, 0), (0, 1)];

/// A smooth quadric with four ordered planes in general position, an
/// orientation of the quadric (which ruling family counts as "left"), and an
/// ordered pair of quadric points on each edge line.
#[derive(Clone, Debug)]
pub struct MarkedTetra {
    q: QuadricP3,
    chart: RulingChart,
    planes: [PlaneP3; 4],
    verts: [PointP3; 4],
    orientation: bool,
    /// `edge_pairs[e] = (E_ij, E_ji)` for `EDGES[e] = (i,j)`.
    edge_pairs: [(PointP3, PointP3); 6],
}

/// Cross-ratio of four collinear points as a finite nonzero number.
pub(crate) fn cr_value(pts: [&PointP3; 4], carrier: &LineP3) -> Result<Cx> {
    let v = cross_ratio_on_line(pts, carrier, tol::CHAIN)?;
    v.value()
        .filter(|z| z.norm() > 1e-14)
        .ok_or_else(|| Error::DegenerateConfiguration("cross-ratio is 0 or ∞".into()))
}

impl MarkedTetra {
    /// Assemble and validate: planes in general position, vertices off the
    /// quadric, plane sections smooth, edge points on the quadric and on
    /// their lines.
    pub fn assemble(
        q: QuadricP3,
        planes: [PlaneP3; 4],
        orientation: bool,
        edge_pairs: [(PointP3, PointP3); 6],
    ) -> Result<MarkedTetra> {
        let chart = RulingChart::new(&q)?;
        let mut verts = [PointP3([Cx::new(0.0, 0.0); 4]); 4];
        for i in 0..4 {
            let others: Vec<&PlaneP3> = (0..4).filter(|&j| j != i).map(|j| &planes[j]).collect();
            verts[i] = point_on_planes(others[0], others[1], others[2])?;
            if q.residual(&verts[i]) < 1e-12 {
                return Err(Error::DegenerateConfiguration(format!(
                    "vertex {} lies on the quadric",
                    i + 1
                )));
            }
            // smooth plane section ⟺ the pole of the plane is off the quadric
            if q.residual(&q.pole(&planes[i])) < 1e-12 {
                return Err(Error::DegenerateConfiguration(format!(
                    "section by plane {} is singular",
                    i + 1
                )));
            }
        }
        for (e, &(i, j)) in EDGES.iter().enumerate() {
            let line = LineP3::through(verts[i], verts[j])?;
            for p in [&edge_pairs[e].0, &edge_pairs[e].1] {
                if q.residual(p) > 1e-6 || !line.contains(p, 1e-6) {
                    return Err(Error::DegenerateConfiguration(format!(
                        "edge point on edge {}{} is off its carrier",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(MarkedTetra { q, chart, planes, verts, orientation, edge_pairs })
    }

    /// Build the marked tetrahedron of a metric tetrahedron.
    ///
    /// Vertices are embedded by the Gram matrix; the quadric is the ambient
    /// absolute (`Σx² = 0` spherically, the light cone hyperbolically). Each
    /// edge gets the canonical marking: the ordering of the two quadric
    /// points for which the edge cross-ratio `c` has `log|c| > 0`
    /// (hyperbolic) or principal argument in `(0, π]` (spherical; the
    /// boundary tie at `c = −1` is broken by the sign of the imaginary part
    /// of the first point's parameter). The quadric orientation is chosen so
    /// that the angle character matches `e^{2i(π−α)}` on the edges, with the
    /// dihedral angles α taken from the cofactor oracle.
    pub fn from_metric(spec: &MetricSpec) -> Result<MarkedTetra> {
        let embedding = spec.vertex_embedding()?;
        let signs = spec.form_signs();
        let mut m = [[Cx::new(0.0, 0.0); 4]; 4];
        for k in 0..4 {
            m[k][k] = Cx::new(signs[k], 0.0);
        }
        let q = QuadricP3::new(m)?;
        let verts = embedding.map(PointP3::from_reals);
        let mut planes = [PlaneP3([Cx::new(0.0, 0.0); 4]); 4];
        for i in 0..4 {
            let others: Vec<&PointP3> = (0..4).filter(|&j| j != i).map(|j| &verts[j]).collect();
            planes[i] = plane_through_points(others[0], others[1], others[2])?;
        }

        let zero = PointP3([Cx::new(0.0, 0.0); 4]);
        let mut edge_pairs = [(zero, zero); 6];
        for (e, &(i, j)) in EDGES.iter().enumerate() {
            let line = LineP3::through(verts[i], verts[j])?;
            let (x, y) = q.line_intersection(&line)?;
            let c = cr_value([&verts[i], &x, &verts[j], &y], &line)?;
            let keep_first = match spec.geometry {
                Geometry::Hyperbolic => c.norm().ln() > 0.0,
                Geometry::Spherical => {
                    let theta = c.arg();
                    if (theta.abs() - std::f64::consts::PI).abs() < 1e-9 {
                        spherical_tie_break(&line, &x)
                    } else {
                        theta > 0.0
                    }
                }
            };
            edge_pairs[e] = if keep_first { (x, y) } else { (y, x) };
        }

        let t = MarkedTetra::assemble(q, planes, false, edge_pairs)?;
        t.calibrate_orientation(spec)
    }

    /// Choose the orientation bit so the angle character agrees with the
    /// metric dihedral angles rather than their negatives.
    fn calibrate_orientation(self, spec: &MetricSpec) -> Result<MarkedTetra> {
        let alphas = metric_angles_oracle(spec)?;
        let a_hom = angle_function(&self)?;
        // first an edge probe, where the expected value is not ±1
        for (e, &(i, j)) in EDGES.iter().enumerate() {
            let expected = (Cx::new(0.0, 2.0 * (std::f64::consts::PI - alphas[e]))).exp();
            if (expected - expected.inv()).norm() < 1e-6 {
                continue; // self-inverse: cannot distinguish orientations
            }
            let got = a_hom.eval(&LatticeVec::basis(edge_point_label(i, j)))?;
            return self.flip_if_closer_to_inverse(got, expected);
        }
        // all edge values self-inverse (e.g. the all-right tetrahedron):
        // probe the vertex-star value, expected e^{−iΩ} with Ω = Σα − π over
        // the edges at vertex 4
        let omega = alphas[2] + alphas[4] + alphas[5] - std::f64::consts::PI;
        let expected = (Cx::new(0.0, -omega)).exp();
        if (expected - expected.inv()).norm() < 1e-6 {
            return Ok(self); // genuinely orientation-ambiguous input
        }
        let got = a_hom.eval(&star_root(4))?;
        self.flip_if_closer_to_inverse(got, expected)
    }

    fn flip_if_closer_to_inverse(self, got: Cx, expected: Cx) -> Result<MarkedTetra> {
        if (got - expected).norm() <= (got.inv() - expected).norm() {
            Ok(self)
        } else {
            let flipped = !self.orientation;
            Ok(self.with_orientation(flipped))
        }
    }

    /// The same tetrahedron with the orientation bit replaced (the other
    /// ruling family becomes "left").
    pub fn with_orientation(mut self, orientation: bool) -> MarkedTetra {
        self.orientation = orientation;
        self
    }

    pub fn quadric(&self) -> &QuadricP3 {
        &self.q
    }

    pub fn chart(&self) -> &RulingChart {
        &self.chart
    }

    pub fn planes(&self) -> &[PlaneP3; 4] {
        &self.planes
    }

    pub fn orientation(&self) -> bool {
        self.orientation
    }

    /// The four vertices `A_i = ∩_{j≠i} H_j`.
    pub fn vertices(&self) -> &[PointP3; 4] {
        &self.verts
    }

    /// The twelve edge points in edge order, each pair ordered
    /// `(E_ij, E_ji)`.
    pub fn edge_points(&self) -> Vec<PointP3> {
        self.edge_pairs.iter().flat_map(|(a, b)| [*a, *b]).collect()
    }

    /// The edge point `E_ij` for an ordered vertex pair (0-based).
    pub fn edge_point(&self, i: usize, j: usize) -> &PointP3 {
        let e = edge_index(i, j);
        if i < j {
            &self.edge_pairs[e].0
        } else {
            &self.edge_pairs[e].1
        }
    }

    /// The edge line through `A_i` and `A_j`.
    pub fn edge_line(&self, i: usize, j: usize) -> Result<LineP3> {
        LineP3::through(self.verts[i], self.verts[j])
    }

    /// The cross-ratio `[A_i, E_ij, A_j, E_ji]` for `i < j` (the square of a
    /// lifted edge value).
    pub fn edge_cross_ratio(&self, i: usize, j: usize) -> Result<Cx> {
        let line = self.edge_line(i, j)?;
        cr_value(
            [&self.verts[i], self.edge_point(i, j), &self.verts[j], self.edge_point(j, i)],
            &line,
        )
    }

    /// The ruling generator through a quadric point that counts as "left"
    /// under the current orientation.
    pub fn left_generator(&self, p: &PointP3) -> Result<LineP3> {
        let fam = if self.orientation { RulingFamily::Second } else { RulingFamily::First };
        self.chart.generator(p, fam, &self.q)
    }

    /// The ruling generator through a quadric point that counts as "right".
    pub fn right_generator(&self, p: &PointP3) -> Result<LineP3> {
        let fam = if self.orientation { RulingFamily::First } else { RulingFamily::Second };
        self.chart.generator(p, fam, &self.q)
    }

    /// The crossing `E'_{ab} = L_{E_ab} ∩ R_{E_ba}` of rulings over an
    /// ordered edge pair (0-based). These twelve crossings are the edge
    /// points of the polar-dual tetrahedron.
    pub fn ruling_crossing(&self, a: usize, b: usize) -> Result<PointP3> {
        let l = self.left_generator(self.edge_point(a, b))?;
        let r = self.right_generator(self.edge_point(b, a))?;
        line_line_intersection(&l, &r)
    }

    /// The polar-dual marked tetrahedron: faces are the polar planes of the
    /// vertices, and the dual marking on the edge `{k,l}` is the pair of
    /// ruling crossings `(E'_{ij}, E'_{ji})` of the complementary edge, with
    /// `(i,j,k,l)` an even permutation. Duality is an involution.
    pub fn dual_tetra(&self) -> Result<MarkedTetra> {
        let dual_planes = [
            self.q.polar_plane(&self.verts[0]),
            self.q.polar_plane(&self.verts[1]),
            self.q.polar_plane(&self.verts[2]),
            self.q.polar_plane(&self.verts[3]),
        ];
        let zero = PointP3([Cx::new(0.0, 0.0); 4]);
        let mut dual_pairs = [(zero, zero); 6];
        for e in 0..6 {
            let (a, b) = DUAL_SRC[e];
            dual_pairs[e] = (self.ruling_crossing(a, b)?, self.ruling_crossing(b, a)?);
        }
        MarkedTetra::assemble(self.q.clone(), dual_planes, self.orientation, dual_pairs)
    }
}

/// Tie-break for the spherical marking when the edge cross-ratio is exactly
/// −1: keep the intersection point whose parameter along the stored edge
/// basis has positive imaginary part.
fn spherical_tie_break(line: &LineP3, x: &PointP3) -> bool {
    let (param, _) = line.parametrize(x);
    match param.value() {
        Some(t) => t.im > 0.0,
        None => false,
    }
}

/// The lattice label of the edge {i,j} (0-based vertex indices).
fn edge_point_label(i: usize, j: usize) -> crate::e8lattice::AffPoint {
    crate::e8lattice::AffPoint::pair((i + 1) as u8, (j + 1) as u8)
}

// ---------------------------------------------------------------------------
// Projective equivalence
// ---------------------------------------------------------------------------

/// The fourteen lattice vectors whose character values generate the full
/// length character: the six edges, e_∅, the four faces, the three cycles.
pub(crate) fn l_generators() -> Vec<LatticeVec> {
    let mut v = vec![LatticeVec::basis(crate::e8lattice::AffPoint::Empty)];
    for &(i, j) in EDGES.iter() {
        v.push(LatticeVec::basis(edge_point_label(i, j)));
    }
    for &(i, j, k) in FACES.iter() {
        v.push(face_root(i as u8 + 1, j as u8 + 1, k as u8 + 1));
    }
    v.push(cycle_root([1, 2, 3, 4]));
    v.push(cycle_root([1, 3, 2, 4]));
    v.push(cycle_root([1, 2, 4, 3]));
    v
}

/// Are two marked tetrahedra projectively equivalent (same point of the
/// moduli space)? Tests equality of the length character on a generating set
/// and of the angle character (which separates the two orientation sheets
/// over a common length character).
pub fn equivalent(a: &MarkedTetra, b: &MarkedTetra, tolerance: f64) -> Result<bool> {
    let la = length_function(a)?;
    let lb = length_function(b)?;
    let aa = angle_function(a)?;
    let ab = angle_function(b)?;
    for v in l_generators() {
        let (x, y) = (la.eval(&v)?, lb.eval(&v)?);
        if (x - y).norm() > tolerance * x.norm().max(y.norm()).max(1.0) {
            return Ok(false);
        }
        let w = v.duality_d();
        let (x, y) = (aa.eval(&w)?, ab.eval(&w)?);
        if (x - y).norm() > tolerance * x.norm().max(y.norm()).max(1.0) {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Serialization: quadric coefficients + planes + orientation + order bits
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct Wire {
    /// Upper-triangle quadric coefficients in row order (10 values).
    quadric: Vec<Cx>,
    planes: [[Cx; 4]; 4],
    orientation: bool,
    /// Per edge: does the deterministic first intersection point of the edge
    /// line with the quadric play the role of `E_ij`?
    edge_bits: [bool; 6],
}

impl Serialize for MarkedTetra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m = self.q.matrix();
        let mut quadric = Vec::with_capacity(10);
        for i in 0..4 {
            for j in i..4 {
                quadric.push(m[i][j]);
            }
        }
        // recompute the canonical intersections to extract the order bits
        let mut edge_bits = [false; 6];
        for (e, &(i, j)) in EDGES.iter().enumerate() {
            let line = LineP3::through(self.verts[i], self.verts[j])
                .map_err(|err| serde::ser::Error::custom(err.to_string()))?;
            let (x, _) = self
                .q
                .line_intersection(&line)
                .map_err(|err| serde::ser::Error::custom(err.to_string()))?;
            edge_bits[e] = x.approx_eq(&self.edge_pairs[e].0, 1e-8);
        }
        Wire { quadric, planes: self.planes.map(|p| p.0), orientation: self.orientation, edge_bits }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MarkedTetra {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as DeError;
        let w = Wire::deserialize(d)?;
        if w.quadric.len() != 10 {
            return Err(D::Error::custom("quadric must have 10 upper-triangle coefficients"));
        }
        let mut m = [[Cx::new(0.0, 0.0); 4]; 4];
        let mut it = w.quadric.iter();
        for i in 0..4 {
            for j in i..4 {
                let c = *it.next().unwrap();
                m[i][j] = c;
                m[j][i] = c;
            }
        }
        let q = QuadricP3::new(m).map_err(|e| D::Error::custom(e.to_string()))?;
        let planes = w.planes.map(PlaneP3);
        let mut verts = [PointP3([Cx::new(0.0, 0.0); 4]); 4];
        for i in 0..4 {
            let others: Vec<&PlaneP3> = (0..4).filter(|&j| j != i).map(|j| &planes[j]).collect();
            verts[i] = point_on_planes(others[0], others[1], others[2])
                .map_err(|e| D::Error::custom(e.to_string()))?;
        }
        let zero = PointP3([Cx::new(0.0, 0.0); 4]);
        let mut edge_pairs = [(zero, zero); 6];
        for (e, &(i, j)) in EDGES.iter().enumerate() {
            let line = LineP3::through(verts[i], verts[j])
                .map_err(|e| D::Error::custom(e.to_string()))?;
            let (x, y) = q
                .line_intersection(&line)
                .map_err(|e| D::Error::custom(e.to_string()))?;
            edge_pairs[e] = if w.edge_bits[e] { (x, y) } else { (y, x) };
        }
        MarkedTetra::assemble(q, planes, w.orientation, edge_pairs)
            .map_err(|e| D::Error::custom(e.to_string()))
    }
}
