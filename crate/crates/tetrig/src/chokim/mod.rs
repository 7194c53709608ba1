//! Eight-point configurations on `P¹`, the degree-4 rational functions they
//! span, and the trigonometric solver built on them.
//!
//! A marked tetrahedron determines two ordered configurations of eight
//! points: one assembled from edge-length sums (face perimeters and
//! closed-walk sums), one from dihedral-angle sums. The same configurations
//! arise as values of the length/angle characters on distinguished lattice
//! vectors, and each configuration packages into a monic-over-monic degree-4
//! rational function (zeros at the face values, poles at the basepoint and
//! the walk values). The two functions are intertwined by a unique Möbius
//! map with a closed form in the principal parameters; following that map
//! backwards recovers the dihedral angles from the edge lengths alone.

mod ckfn;
mod config;
mod regge;
mod solve;

pub use ckfn::{
    ck_from_config, evaluate_ck, level_one_quadratic, principal_parameters, psi, psi_candidates,
    CKFn, PrincipalPair,
};
pub use config::{
    config_from_hom, config_metric, cross_ratio_invariant, projective_equivalence, Config8,
    MetricConfig,
};
pub use regge::regge_transform;
pub use solve::{solve_angles, Solution};

/// Edge indices (in [`crate::tetra::EDGES`] order) bounding each face, in
/// [`crate::tetra::FACES`] order.
pub(crate) const FACE_EDGES: [[usize; 3]; 4] = [[0, 1, 3], [0, 2, 4], [1, 2, 5], [3, 4, 5]];

/// Edge indices meeting the vertex *opposite* each face (the star of the
/// omitted vertex), in [`crate::tetra::FACES`] order. The angle sum over
/// these edges, minus π, is the solid-angle quantity attached to the face.
pub(crate) const OPPOSITE_STAR_EDGES: [[usize; 3]; 4] =
    [[2, 4, 5], [1, 3, 5], [0, 3, 4], [0, 1, 2]];

/// Edge indices traversed by the three closed 4-walks `1→2→3→4→1`,
/// `1→3→2→4→1`, `1→2→4→3→1`, matching the order of
/// [`crate::e8lattice::cycle_roots`].
pub(crate) const CYCLE_EDGES: [[usize; 4]; 3] = [[0, 3, 5, 2], [1, 3, 4, 2], [0, 4, 5, 1]];
