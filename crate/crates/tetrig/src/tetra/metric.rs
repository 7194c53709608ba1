//! Metric input data: six edge lengths in spherical or hyperbolic geometry,
//! realizability via the Gram matrix, the vertex embedding, and the classical
//! cofactor formula for dihedral angles (used as an independent oracle).

use serde::{Deserialize, Serialize};

use super::{edge_index, EDGES};
use crate::error::{Error, Result};
use crate::tol;

/// The two non-Euclidean geometries.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Geometry {
    Spherical,
    Hyperbolic,
}

/// Edge lengths keyed by vertex pairs, as they appear in JSON.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
struct LengthsByPair {
    #[serde(rename = "12")]
    l12: f64,
    #[serde(rename = "13")]
    l13: f64,
    #[serde(rename = "14")]
    l14: f64,
    #[serde(rename = "23")]
    l23: f64,
    #[serde(rename = "24")]
    l24: f64,
    #[serde(rename = "34")]
    l34: f64,
}

/// A non-Euclidean tetrahedron given by its six positive edge lengths.
///
/// Realizability is a property of the Gram matrix `G` (diagonal 1,
/// off-diagonal `cos l` or `cosh l`): positive definite in the spherical
/// case, signature `(1,3)` in the hyperbolic case.
#[derive(Clone, Copy, Debug)]
pub struct MetricSpec {
    pub geometry: Geometry,
    /// Lengths in [`EDGES`] order: l12, l13, l14, l23, l24, l34.
    pub lengths: [f64; 6],
}

impl Serialize for MetricSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            geometry: Geometry,
            lengths: LengthsByPair,
        }
        let l = self.lengths;
        Wire {
            geometry: self.geometry,
            lengths: LengthsByPair {
                l12: l[0],
                l13: l[1],
                l14: l[2],
                l23: l[3],
                l24: l[4],
                l34: l[5],
            },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MetricSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            geometry: Geometry,
            lengths: LengthsByPair,
        }
        let w = Wire::deserialize(d)?;
        let l = w.lengths;
        Ok(MetricSpec {
            geometry: w.geometry,
            lengths: [l.l12, l.l13, l.l14, l.l23, l.l24, l.l34],
        })
    }
}

impl MetricSpec {
    pub fn new(geometry: Geometry, lengths: [f64; 6]) -> MetricSpec {
        MetricSpec { geometry, lengths }
    }

    pub fn length(&self, i: usize, j: usize) -> f64 {
        self.lengths[edge_index(i, j)]
    }

    /// The 4×4 Gram matrix: diagonal 1, entry (i,j) = cos/cosh of `l_ij`.
    pub fn gram(&self) -> [[f64; 4]; 4] {
        let mut g = [[0.0; 4]; 4];
        for i in 0..4 {
            g[i][i] = 1.0;
        }
        for (idx, &(i, j)) in EDGES.iter().enumerate() {
            let v = match self.geometry {
                Geometry::Spherical => self.lengths[idx].cos(),
                Geometry::Hyperbolic => self.lengths[idx].cosh(),
            };
            g[i][j] = v;
            g[j][i] = v;
        }
        g
    }

    /// Vertex vectors `v_i` (rows) with `Σ_k σ_k v_i[k] v_j[k] = G_ij`, where
    /// `σ = (1,1,1,1)` spherically and `(1,−1,−1,−1)` hyperbolically. The
    /// quadric of the tetrahedron is `{Σ σ_k x_k² = 0}` in these coordinates.
    ///
    /// Errors: [`Error::NotRealizable`] when the Gram signature is wrong for
    /// the geometry, [`Error::NearDegenerate`] when `|det G|` is below
    /// [`tol::NEAR_DEGENERATE_GRAM`].
    pub fn vertex_embedding(&self) -> Result<[[f64; 4]; 4]> {
        let g = self.gram();
        let (l, d) = ldlt(&g).ok_or(Error::NearDegenerate { det: 0.0 })?;
        let det: f64 = d.iter().product();
        if det.abs() < tol::NEAR_DEGENERATE_GRAM {
            return Err(Error::NearDegenerate { det: det.abs() });
        }
        let sig_ok = match self.geometry {
            Geometry::Spherical => d.iter().all(|&x| x > 0.0),
            Geometry::Hyperbolic => d[0] > 0.0 && d[1] < 0.0 && d[2] < 0.0 && d[3] < 0.0,
        };
        if !sig_ok {
            let plus = d.iter().filter(|&&x| x > 0.0).count();
            return Err(Error::NotRealizable(format!(
                "Gram signature ({},{}) is wrong for {:?} geometry",
                plus,
                4 - plus,
                self.geometry
            )));
        }
        let mut v = [[0.0; 4]; 4];
        for i in 0..4 {
            for k in 0..4 {
                v[i][k] = l[i][k] * d[k].abs().sqrt();
            }
        }
        Ok(v)
    }

    /// The diagonal `σ` of the ambient quadratic form for this geometry.
    pub fn form_signs(&self) -> [f64; 4] {
        match self.geometry {
            Geometry::Spherical => [1.0, 1.0, 1.0, 1.0],
            Geometry::Hyperbolic => [1.0, -1.0, -1.0, -1.0],
        }
    }
}

/// Cholesky-style `G = L·diag(d)·Lᵀ` without pivoting (unit lower `L`).
/// Returns `None` when a leading pivot collapses.
fn ldlt(g: &[[f64; 4]; 4]) -> Option<([[f64; 4]; 4], [f64; 4])> {
    let mut l = [[0.0; 4]; 4];
    let mut d = [0.0; 4];
    for i in 0..4 {
        l[i][i] = 1.0;
    }
    for j in 0..4 {
        let mut dj = g[j][j];
        for k in 0..j {
            dj -= l[j][k] * l[j][k] * d[k];
        }
        if dj.abs() < 1e-300 {
            return None;
        }
        d[j] = dj;
        for i in j + 1..4 {
            let mut s = g[i][j];
            for k in 0..j {
                s -= l[i][k] * l[j][k] * d[k];
            }
            l[i][j] = s / dj;
        }
    }
    Some((l, d))
}

fn minor3(g: &[[f64; 4]; 4], skip_row: usize, skip_col: usize) -> f64 {
    let rows: Vec<usize> = (0..4).filter(|&r| r != skip_row).collect();
    let cols: Vec<usize> = (0..4).filter(|&c| c != skip_col).collect();
    let m = |r: usize, c: usize| g[rows[r]][cols[c]];
    m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
        - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
        + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
}

/// Dihedral angles from the Gram matrix by the classical cofactor formula:
/// `cos α_ij = −c_kl / √(c_kk c_ll)` with `c` the cofactor matrix of `G` and
/// `{k,l}` the pair complementary to `{i,j}`. Returns angles in `(0, π)`, in
/// [`EDGES`] order.
pub fn metric_angles_oracle(spec: &MetricSpec) -> Result<[f64; 6]> {
    // validates realizability up front
    spec.vertex_embedding()?;
    let g = spec.gram();
    let mut cof = [[0.0; 4]; 4];
    for r in 0..4 {
        for c in 0..4 {
            let sign = if (r + c) % 2 == 0 { 1.0 } else { -1.0 };
            cof[r][c] = sign * minor3(&g, r, c);
        }
    }
    let mut angles = [0.0; 6];
    for (idx, &(i, j)) in EDGES.iter().enumerate() {
        let (k, l) = complementary_pair(i, j);
        let denom = cof[k][k] * cof[l][l];
        if denom <= 0.0 {
            return Err(Error::NotRealizable(format!(
                "cofactor product non-positive at edge {}{}",
                i + 1,
                j + 1
            )));
        }
        let c = (-cof[k][l] / denom.sqrt()).clamp(-1.0, 1.0);
        angles[idx] = c.acos();
    }
    Ok(angles)
}

/// The pair `{k,l}` with `{i,j,k,l} = {0,1,2,3}`, `k < l`.
pub fn complementary_pair(i: usize, j: usize) -> (usize, usize) {
    let mut rest = (0..4).filter(|&m| m != i && m != j);
    let k = rest.next().unwrap();
    let l = rest.next().unwrap();
    (k, l)
}
