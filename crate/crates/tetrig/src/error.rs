//! Crate-wide error type.
//!
//! Every fallible operation returns one of these variants; the CLI maps them
//! onto its exit-code contract (bad input vs. non-generic input vs. numerical
//! failure), so the distinctions matter beyond diagnostics.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong across the geometry, lattice, and solver
/// layers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    // ---- projective geometry -------------------------------------------------
    /// A cross-ratio or configuration query hit a 0/0 shape.
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    /// A point handed to a cross-ratio-on-line computation does not lie on the
    /// carrier line within tolerance.
    #[error("point is off the carrier line (residual {residual:.3e})")]
    PointOffCarrier { residual: f64 },
    /// The plane section of the quadric is singular, so conic cross-ratios are
    /// undefined.
    #[error("degenerate conic: {0}")]
    DegenerateConic(String),
    /// Three source or target points for a Möbius interpolation coincide.
    #[error("degenerate triple for Möbius interpolation")]
    DegenerateTriple,
    /// A line meets the quadric doubly (discriminant ≈ 0).
    #[error("line is tangent to the quadric (normalized discriminant {discriminant:.3e})")]
    TangentLine { discriminant: f64 },
    /// The line lies entirely inside the quadric.
    #[error("line is contained in the quadric")]
    LineInQuadric,
    /// Ruling generators were requested at a point not on the quadric.
    #[error("point is off the quadric (residual {residual:.3e})")]
    PointOffQuadric { residual: f64 },

    // ---- lattice -------------------------------------------------------------
    /// The doubled-coordinate vector is not in the lattice (mod-2 reduction is
    /// not a code word).
    #[error("vector {0:?} is not in the lattice")]
    NotInLattice([i64; 8]),
    /// A reflection was requested in a vector of self-pairing ≠ −2.
    #[error("vector {0:?} is not a root")]
    NotARoot([i64; 8]),
    /// A character was evaluated outside its tagged sublattice.
    #[error("vector {vector:?} is not in the character domain {domain}")]
    VectorNotInDomain { vector: [i64; 8], domain: &'static str },

    // ---- metric / tetrahedron construction -----------------------------------
    /// The Gram matrix of the metric data has the wrong signature for the
    /// requested geometry.
    #[error("metric data not realizable: {0}")]
    NotRealizable(String),
    /// The metric Gram matrix is too close to singular to trust.
    #[error("near-degenerate metric data (|det Gram| = {det:.3e})")]
    NearDegenerate { det: f64 },
    /// The Menelaus sign system for edge lifts has no ±1 solution — a
    /// numerical failure upstream, since the underlying double cover always
    /// provides one.
    #[error("lift sign system inconsistent: {0}")]
    SignSystemInconsistent(String),

    // ---- Cho-Kim / solver ----------------------------------------------------
    /// A zero of the rational function collides with a pole (non-generic
    /// configuration).
    #[error("zero/pole collision in rational function: {0}")]
    ZeroPoleCollision(String),
    /// The principal-parameter quadratic is degenerate (discriminant ≈ 0,
    /// equivalently vanishing length determinant).
    #[error("degenerate principal-parameter quadratic (|discriminant| = {disc:.3e})")]
    DegenerateQuadratic { disc: f64 },
    /// Neither ordering of the principal pair yields a verifying Möbius map.
    #[error("no principal-parameter ordering verifies the intertwining identity (best residual {best:.3e})")]
    NoVerifyingOrder { best: f64 },
    /// Several zero/pole-to-face matchings survived all consistency filters.
    #[error("ambiguous zero-to-face assignment: {count} consistent matchings")]
    AssignmentAmbiguous { count: usize },
    /// No zero/pole-to-face matching survived the consistency filters.
    #[error("no consistent zero-to-face assignment (best consistency residual {best:.3e})")]
    NoConsistentAssignment { best: f64 },
    /// No Möbius map carries one configuration to the other.
    #[error("configurations not projectively equivalent (residual {residual:.3e})")]
    NotEquivalent { residual: f64 },
    /// A configuration has fewer than three distinct points, so no equivalence
    /// can be anchored.
    #[error("configuration too degenerate: fewer than 3 distinct points")]
    TooDegenerate,

    // ---- reconstruction -------------------------------------------------------
    /// The character is outside the reconstructible locus (vanishing
    /// determinant or non-generic).
    #[error("character not in the reconstructible moduli locus: {0}")]
    NotInModuli(String),
    /// Reconstruction succeeded formally but the recovered length character
    /// does not round-trip.
    #[error("reconstruction round-trip failed (residual {residual:.3e})")]
    RoundTripFailure { residual: f64 },

    // ---- Picard lattice -------------------------------------------------------
    /// A class pairs nontrivially with a blown-down class in strict mode.
    #[error("class pairs nontrivially with a blown-down class: {0}")]
    NotInComplement(String),
    /// An exact integer postcondition failed.
    #[error("exact consistency check failed: {0}")]
    ConsistencyFailure(String),
    /// The Gram matrices of a root-basis matching disagree.
    #[error("Gram mismatch at node pair ({i},{j}): lhs {lhs}, rhs {rhs}")]
    GramMismatch { i: usize, j: usize, lhs: i64, rhs: i64 },
    /// A class supposed to lie in the fiber-orthogonal sublattice does not.
    #[error("class does not pair to zero with the fiber class (pairing {pairing})")]
    NotInFPerp { pairing: i64 },

    // ---- correspondence chains -------------------------------------------------
    /// An auxiliary intersection point of a chain recipe is ill-defined on
    /// this input.
    #[error("auxiliary construction degenerate: {0}")]
    AuxiliaryDegenerate(String),
    /// The three loci that should meet in the single point W fail to concur.
    #[error("concurrency failure: pairwise intersection scatter {scatter:.3e}")]
    ConcurrencyFailure { scatter: f64 },

    // ---- plumbing ---------------------------------------------------------------
    /// Malformed user input (CLI/JSON layer).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
