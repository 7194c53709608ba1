//! Chain recipes tying a marked tetrahedron's length and angle characters
//! to explicit projective constructions on its quadric.
//!
//! Four recipes each target one distinguished half-sum root: two on the
//! length side read face half-sums off plane sections of the quadric, and
//! two on the angle side read vertex stars off tangent-plane pencils along
//! a ruling, evaluated on the dual edge lines of the polar-dual
//! tetrahedron. Each recipe reports every intermediate equality and
//! incidence separately, so a failure localizes to a single step.
//!
//! The verification layer replays all four recipes against metric data
//! ([`verify_correspondence`]), transports them to the remaining half-sum
//! roots by vertex relabeling ([`relabel`]), and extends them to the whole
//! length-side sublattice by decomposing arbitrary vectors over `e_∅`, the
//! edge vectors, and the face half-sums ([`decompose_length_domain`],
//! [`geometric_length_value`]).

mod geometry;
mod recipes;
mod verify;

pub use recipes::{
    res_f1_edge_recipe, res_f1_face_recipe, res_f2_face_recipe, res_f2_vertex_recipe, ChainLink,
    ChainReport, IncidenceCheck,
};
pub use verify::{
    decompose_length_domain, geometric_length_value, relabel, sign_family_generators,
    verify_correspondence, CorrespondenceReport, LengthDecomposition, PatternCheck,
};
