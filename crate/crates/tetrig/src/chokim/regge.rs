//! The Regge involution on edge six-tuples.
//!
//! Two opposite edges are held fixed; each of the remaining four is replaced
//! by half the sum of the other three. Applied to the edge lengths of a
//! non-Euclidean tetrahedron it produces another realizable tetrahedron
//! whose *dihedral angles* transform by the identical rule — the transport
//! statement exercised by the integration tests.

/// Apply the Regge involution to a six-tuple in edge order
/// `12, 13, 14, 23, 24, 34`. Entries `12` and `34` (positions 0 and 5) are
/// fixed; the four entries crossing that edge pair mix by the half-sum rule.
/// The same map serves for length tuples and angle tuples.
pub fn regge_transform(x: &[f64; 6]) -> [f64; 6] {
    let s = (x[1] + x[2] + x[3] + x[4]) / 2.0;
    [x[0], s - x[1], s - x[2], s - x[3], s - x[4], x[5]]
}
