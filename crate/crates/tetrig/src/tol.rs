//! Central tolerance constants.
//!
//! Every floating-point comparison in the crate routes through one of these
//! constants, each documented with the reason it can be this tight (or must
//! be this loose). Tests pin the values: loosening one to paper over a
//! regression should be a visible, reviewable act.
//!
//! The scales below assume inputs in the "desk range": metric edge lengths
//! of order 1, so quadric coefficients, cross-ratios, and character values
//! stay within a few orders of magnitude of 1. Nothing in the crate is
//! designed for adversarially large inputs.

/// Default relative tolerance for projective equality (proportionality of
/// homogeneous vectors) and generic incidence checks.
///
/// A single cross-product-style comparison of unit-scale homogeneous vectors
/// loses at most ~2 digits to cancellation; 1e−9 keeps seven spare digits of
/// f64 headroom while rejecting everything that is not genuinely equal.
pub const PROJ_EQ: f64 = 1e-9;

/// Relative residual allowed for the multi-step cross-ratio chain recipes and
/// for metric equivalence of 8-point configurations.
///
/// These values pass through ~10 dependent constructions (plane meets,
/// projections, polar duals), each of which can lose a digit on skewed
/// tetrahedra; 1e−7 is loose enough for the random metric suites and tight
/// enough that a wrong branch or sign shows up as a 1e0-size failure.
pub const CHAIN: f64 = 1e-7;

/// Relative tolerance for single cross-ratio identities and configuration
/// invariants (one or two constructions deep).
pub const CROSS_RATIO: f64 = 1e-8;

/// Agreement between the solver's recovered dihedral angles and the
/// Gram-cofactor oracle.
///
/// The solver path goes metric → quadric → lifts → rational function →
/// quadratic roots → Möbius map → matching search; each stage is stable but
/// the composition warrants the same budget as the chain recipes.
pub const SOLVER: f64 = 1e-7;

/// Tolerance for closed-form special cases (all-right tetrahedron, exact
/// involution identities) where no conditioning excuse exists.
pub const EXACT_CASE: f64 = 1e-9;

/// Drift allowed across the 16 lift-gauge sign flips of a length character.
///
/// Gauge flips permute *signs of square roots*; the evaluated character value
/// is the same product of the same factors up to sign cancellation, so the
/// drift is pure rounding noise.
pub const GAUGE: f64 = 1e-10;

/// Agreement between the two independent determinant formulas (the 4×4
/// matrix form and the root-sum expansion).
///
/// Both are short explicit polynomials in the same eight half-values;
/// disagreement beyond rounding indicates a wrong coefficient, not noise.
pub const DET_FORMS: f64 = 1e-10;

/// Invariance of the length determinant under Weyl-group substitutions.
///
/// Evaluating the root-sum expansion after a group substitution reshuffles
/// ~174 products of eight unit-scale factors; 1e−9 absorbs the reshuffled
/// rounding while catching any genuine variance.
pub const DET_INVARIANCE: f64 = 1e-9;

/// Threshold on |det Gram| under which metric data is rejected as
/// near-degenerate rather than propagated into the projective construction.
pub const NEAR_DEGENERATE_GRAM: f64 = 1e-10;

/// Normalized discriminant magnitude below which a line is reported tangent
/// to the quadric instead of returning two nearly coincident points.
pub const TANGENT_DISC: f64 = 1e-12;

/// Mutual-consistency tolerance used when filtering zero-to-face matchings in
/// the solver: six independent recoveries of each edge value must agree to
/// this relative error before a matching is accepted.
///
/// Looser than [`SOLVER`] on purpose: the filter must never reject the true
/// matching on a skewed-but-legal tetrahedron; final answers are still
/// checked against [`SOLVER`].
pub const ASSIGNMENT: f64 = 1e-6;

/// Residual bound for verifying a Möbius intertwining identity at probe
/// points (chordal metric on P¹).
pub const PSI_VERIFY: f64 = 1e-7;
