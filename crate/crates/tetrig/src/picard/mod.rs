//! Divisor-class bookkeeping for the surfaces attached to a marked
//! tetrahedron, and the lattice identities that tie their geometry to the
//! length and angle characters.
//!
//! Two lattices are modelled exactly over the integers: the Picard lattice
//! of the quadric blown up in the twelve edge points (rank 14, signature
//! `(1, 13)`), and the Picard lattice of the conic-bundle surface obtained
//! by contracting four disjoint `(-1)`-classes (rank 10, signature
//! `(1, 9)`).  The pushforward between them, the classes of the reducible
//! conic fibers, and the conic-bundle grading live in [`classes`]-level
//! exports ([`blow_down`], [`fiber_component_classes`], [`classify`]).
//!
//! On the conic-bundle side, the orthogonal complement of the fiber class
//! modulo the fiber class is an even unimodular rank-8 lattice — a copy of
//! E₈ with its negative-definite form.  A *marking* realizes that
//! isomorphism concretely by eight divisor classes whose Gram matrix is the
//! E₈ Dynkin matrix, paired with eight explicit roots
//! ([`MarkingIso`], [`incidence_marking`], [`project_mod_f`]).  A second
//! marking arises from a chain of sections of the conic bundle
//! ([`chain_assignment`], [`chain_marking`]); the two agree on all
//! fiber data but differ by a Weyl twist of the middle `D₆`.
//!
//! The section-chain data is pinned by two exhaustive searches with unique
//! solutions — a class identity for the non-split fibers ([`search_2b`],
//! [`verify_2b`]) and the fourteen root identities for the component
//! choices ([`verify_chain_identities`]) — and both reproduce the incidence
//! description of which component each section crosses.

mod classes;
mod exact;
mod identities;
mod marking;

pub use classes::{
    blow_down, blow_down_strict, blown_down_classes, classify, fiber_component_classes,
    pic_pairing, pic_signature, rt_pairing, rt_signature, ClassKind, FiberComponents, PicClass,
    RTClass, E_LABELS, U_LABELS,
};
pub use identities::{
    chain_assignment, chain_identity_report, search_2b, verify_2b, verify_chain_identities,
    BAssignment, IdentityLine, IdentityReport, TwoBReport, TwoBSolution,
};
pub use marking::{chain_marking, incidence_marking, project_mod_f, MarkingIso};
