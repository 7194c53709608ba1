//! The section-chain bookkeeping of the conic bundle: which component of
//! each split fiber the distinguished sections pass through, the class
//! identity pinning those components, and the fourteen root-lattice
//! identities that tie the chain marking to the length and angle
//! characters.
//!
//! Each of the eight `u`-labelled fibers of the bundle carries two natural
//! section classes through it, `u_ij` and `B - u_ij` for the bundle class
//! `B`.  Four fibers are *non-split* (the two distinguished sections cross
//! the same component there — the zeros); four are *split* (they cross
//! opposite components — the poles).  The assignment of fibers and
//! components is not chosen: the zero components are pinned by a unique
//! class identity (an exhaustive search over all `C(8,4)·2⁴ = 1120`
//! fiber/component selections has exactly one solution), and the remaining
//! component choices are pinned by requiring the chain marking to exist and
//! to satisfy the fourteen identities (an exhaustive search over all `2⁸ =
//! 256` component selections again has exactly one solution).  The search
//! result coincides with the incidence pattern: the component chosen at
//! each fiber is exactly the one meeting the fiber component `F₁₁`.

use serde::Serialize;

use crate::e8lattice::{cycle_root, face_root, star_root, AffPoint, LatticeVec};
use crate::error::{Error, Result};

use super::classes::{fiber_component_classes, pic_pairing, PicClass, U_LABELS};
use super::marking::{e8_node_vectors, chain_marking, MarkingIso};

/// Require a conic-bundle class: `B² = 0` and `B·f = 2`.
fn validate_bundle(bundle: &PicClass) -> Result<()> {
    let self_int = pic_pairing(bundle, bundle);
    let degree = pic_pairing(bundle, &PicClass::fiber_class());
    if self_int != 0 || degree != 2 {
        return Err(Error::InvalidInput(format!(
            "bundle class must satisfy B² = 0 and B·f = 2, got B² = {self_int}, B·f = {degree} for {bundle}"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// The 2B class identity
// ---------------------------------------------------------------------------

/// Result of checking a four-component selection against the class identity
/// `Σ components = 2B - F₁₁ + F₂₂`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct TwoBReport {
    /// Whether the identity holds exactly.
    pub holds: bool,
    /// `Σ components + F₁₁ - F₂₂ - 2B`, the zero class iff the identity
    /// holds.
    pub residual: PicClass,
}

/// The unique solution of the class identity: the four fibers (by ordered
/// label) and the component of each entering the sum.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct TwoBSolution {
    /// The four fiber labels, in basis order.
    pub fibers: [(u8, u8); 4],
    /// The chosen component over each fiber, aligned with `fibers`.
    pub components: [PicClass; 4],
}

/// Check the class identity `Σ components = 2B - F₁₁ + F₂₂` for a given
/// selection of four components.
pub fn verify_2b(bundle: &PicClass, components: &[PicClass; 4]) -> TwoBReport {
    let fc = fiber_component_classes().expect("fiber components are internally consistent");
    let sum = components
        .iter()
        .fold(PicClass::ZERO, |acc, c| acc + *c);
    let residual = sum + fc.f11 - fc.f22 - *bundle * 2;
    TwoBReport {
        holds: residual == PicClass::ZERO,
        residual,
    }
}

/// Exhaustively search all `C(8,4)·2⁴ = 1120` ways to pick four fibers and
/// one section class over each for the class identity, and return the
/// unique solution; any other solution count is a consistency failure.
pub fn search_2b(bundle: &PicClass) -> Result<TwoBSolution> {
    validate_bundle(bundle)?;
    let mut found: Vec<TwoBSolution> = Vec::new();
    for a in 0..8 {
        for b in a + 1..8 {
            for c in b + 1..8 {
                for d in c + 1..8 {
                    let quad = [a, b, c, d];
                    for bits in 0..16u32 {
                        let components: [PicClass; 4] = std::array::from_fn(|k| {
                            let (i, j) = U_LABELS[quad[k]];
                            let u = PicClass::u(i, j);
                            if bits & (1 << k) != 0 {
                                *bundle - u
                            } else {
                                u
                            }
                        });
                        if verify_2b(bundle, &components).holds {
                            found.push(TwoBSolution {
                                fibers: quad.map(|q| U_LABELS[q]),
                                components,
                            });
                        }
                    }
                }
            }
        }
    }
    match <[TwoBSolution; 1]>::try_from(found.as_slice()) {
        Ok([solution]) => Ok(solution),
        Err(_) => Err(Error::ConsistencyFailure(format!(
            "class identity search expected a unique solution, found {}",
            found.len()
        ))),
    }
}

// ---------------------------------------------------------------------------
// The section-chain assignment
// ---------------------------------------------------------------------------

/// The fiber order underlying the chain: the four non-split fibers (zeros)
/// followed by the four split fibers (poles), each group in basis order.
///
/// For the distinguished bundle classes the zero set is `{13, 31, 24, 42}`
/// by the class-identity search, making this the canonical order.
fn chain_order(zeros: [(u8, u8); 4]) -> [(u8, u8); 8] {
    let mut order = [(0u8, 0u8); 8];
    order[..4].copy_from_slice(&zeros);
    let mut k = 4;
    for &p in U_LABELS.iter() {
        if !zeros.contains(&p) {
            order[k] = p;
            k += 1;
        }
    }
    debug_assert_eq!(k, 8);
    order
}

/// A complete section-chain assignment for a bundle class `B`: the eight
/// fibers in chain order, and over each the section component crossed by
/// each of the two distinguished sections.
#[derive(Clone, Debug, Serialize)]
pub struct BAssignment {
    bundle: PicClass,
    labels: [(u8, u8); 8],
    meets_f11: [PicClass; 8],
    meets_f21: [PicClass; 8],
}

impl BAssignment {
    /// The bundle class `B`.
    pub fn bundle(&self) -> PicClass {
        self.bundle
    }

    /// The eight fiber labels in chain order (zeros first).
    pub fn labels(&self) -> [(u8, u8); 8] {
        self.labels
    }

    /// The component over each fiber crossed by the first distinguished
    /// section (the one through `F₁₁`).
    pub fn meets_f11(&self) -> &[PicClass; 8] {
        &self.meets_f11
    }

    /// The component over each fiber crossed by the second distinguished
    /// section (the one through `F₂₁`).
    pub fn meets_f21(&self) -> &[PicClass; 8] {
        &self.meets_f21
    }

    /// Whether the two distinguished sections cross different components
    /// over fiber `k` (true exactly at the poles, positions 4–7).
    pub fn is_split(&self, k: usize) -> bool {
        self.meets_f11[k] != self.meets_f21[k]
    }

    /// The eight divisor classes of the chain marking, in diagram order:
    /// `-F₁₁`, then `B - b₁ - b₂`, then consecutive differences of the
    /// chain `b₁, …, b₇` with `b₁ - b₂` as the hanging leaf (`b_k` is the
    /// component at position `k` crossed by the first section).
    pub fn node_classes(&self) -> Result<[PicClass; 8]> {
        let fc = fiber_component_classes()?;
        let b = &self.meets_f11;
        Ok([
            -fc.f11,
            self.bundle - b[0] - b[1],
            b[1] - b[2],
            b[0] - b[1],
            b[2] - b[3],
            b[3] - b[4],
            b[4] - b[5],
            b[5] - b[6],
        ])
    }
}

/// The seven length-side root targets: the four face roots shifted by
/// `-e_∅`, then the three cycle roots.
fn length_targets() -> [LatticeVec; 7] {
    let e_void = LatticeVec::basis(AffPoint::Empty);
    [
        face_root(2, 3, 4) - e_void,
        face_root(1, 3, 4) - e_void,
        face_root(1, 2, 4) - e_void,
        face_root(1, 2, 3) - e_void,
        cycle_root([1, 2, 3, 4]),
        cycle_root([1, 2, 4, 3]),
        cycle_root([1, 3, 2, 4]),
    ]
}

/// The seven angle-side root targets: the four vertex-star roots, then the
/// same three cycle roots.
fn angle_targets() -> [LatticeVec; 7] {
    [
        star_root(1),
        star_root(2),
        star_root(3),
        star_root(4),
        cycle_root([1, 2, 3, 4]),
        cycle_root([1, 2, 4, 3]),
        cycle_root([1, 3, 2, 4]),
    ]
}

/// Check one candidate chain `b1`/`b2` against the three requirements on a
/// section-chain assignment: its chain marking exists (matching Gram
/// matrices), the marking sends the second reducible-fiber component to
/// `e_∅`, and all fourteen identities hold under it.
fn chain_survives(
    bundle: &PicClass,
    neg_f11: &PicClass,
    f21: &PicClass,
    b1: &[PicClass; 8],
    b2: &[PicClass; 8],
    e_void: &LatticeVec,
    ltargets: &[LatticeVec; 7],
    atargets: &[LatticeVec; 7],
) -> bool {
    let nodes = [
        *neg_f11,
        *bundle - b1[0] - b1[1],
        b1[1] - b1[2],
        b1[0] - b1[1],
        b1[2] - b1[3],
        b1[3] - b1[4],
        b1[4] - b1[5],
        b1[5] - b1[6],
    ];
    let Ok(iso) = MarkingIso::from_pairs(nodes, e8_node_vectors()) else {
        return false;
    };
    if !matches!(iso.project(f21), Ok(v) if v == *e_void) {
        return false;
    }
    (0..7).all(|i| matches!(iso.project(&(b1[i] - b1[7])), Ok(v) if v == ltargets[i]))
        && (0..7).all(|i| matches!(iso.project(&(b2[7] - b2[i])), Ok(v) if v == atargets[i]))
}

/// Determine the section-chain assignment for a bundle class by exhaustive
/// search, asserting uniqueness at both stages.
///
/// The class-identity search pins the four non-split fibers and their
/// components; the remaining freedom — one component choice per fiber, `2⁸
/// = 256` candidates in all — is searched against the existence of the
/// chain marking, the normalization `π(F₂₁) = e_∅`, and the fourteen
/// identities.  Exactly one candidate survives, and its component at every
/// fiber is the one meeting `F₁₁` — the incidence answer — which is
/// rechecked before returning.
pub fn chain_assignment(bundle: &PicClass) -> Result<BAssignment> {
    validate_bundle(bundle)?;
    let two_b = search_2b(bundle)?;
    let labels = chain_order(two_b.fibers);
    let fc = fiber_component_classes()?;
    let e_void = LatticeVec::basis(AffPoint::Empty);
    let ltargets = length_targets();
    let atargets = angle_targets();
    let neg_f11 = -fc.f11;

    let mut survivors: Vec<[PicClass; 8]> = Vec::new();
    for bits in 0..256u32 {
        let b1: [PicClass; 8] = std::array::from_fn(|k| {
            let (i, j) = labels[k];
            let u = PicClass::u(i, j);
            if bits & (1 << k) != 0 {
                *bundle - u
            } else {
                u
            }
        });
        let b2: [PicClass; 8] =
            std::array::from_fn(|k| if k < 4 { b1[k] } else { *bundle - b1[k] });
        if chain_survives(
            bundle, &neg_f11, &fc.f21, &b1, &b2, &e_void, &ltargets, &atargets,
        ) {
            survivors.push(b1);
        }
    }
    let [b1] = <[[PicClass; 8]; 1]>::try_from(survivors.as_slice()).map_err(|_| {
        Error::ConsistencyFailure(format!(
            "chain component search expected a unique survivor over 256 candidates, found {}",
            survivors.len()
        ))
    })?;

    let meets_f21: [PicClass; 8] =
        std::array::from_fn(|k| if k < 4 { b1[k] } else { *bundle - b1[k] });
    let assignment = BAssignment {
        bundle: *bundle,
        labels,
        meets_f11: b1,
        meets_f21,
    };

    // cross-check the search outcome against the incidence description
    for k in 0..8 {
        if pic_pairing(&assignment.meets_f11[k], &fc.f11) != 1
            || pic_pairing(&assignment.meets_f21[k], &fc.f21) != 1
        {
            return Err(Error::ConsistencyFailure(format!(
                "searched component over fiber {:?} does not meet its reducible-fiber component",
                labels[k]
            )));
        }
        // the solution of the class identity reappears at the zeros
        if k < 4 && assignment.meets_f11[k] != two_b.components[k] {
            return Err(Error::ConsistencyFailure(format!(
                "zero component over fiber {:?} disagrees with the class-identity solution",
                labels[k]
            )));
        }
    }
    Ok(assignment)
}

// ---------------------------------------------------------------------------
// The fourteen identities
// ---------------------------------------------------------------------------

/// One verified identity: a projected section-chain difference against its
/// root target.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct IdentityLine {
    /// Which identity this is (`length/...` or `angle/...`).
    pub label: &'static str,
    /// The root the identity asserts.
    pub target: LatticeVec,
    /// The chain-marking image of the section-class difference.
    pub projected: LatticeVec,
    /// Whether the two agree exactly.
    pub holds: bool,
}

/// The outcome of verifying all fourteen identities for a bundle class.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    /// The section-chain assignment the identities are evaluated on.
    pub assignment: BAssignment,
    /// The fourteen identity lines: seven length-side, seven angle-side.
    pub lines: Vec<IdentityLine>,
    /// Conjunction of all fourteen `holds` flags.
    pub all_hold: bool,
    /// Every target is a root.
    pub targets_are_roots: bool,
    /// The four face-root lines land in the sublattice orthogonal to
    /// `e_1234` (the length-character domain).
    pub face_lines_in_e7l: bool,
    /// The four star-root lines land in the sublattice orthogonal to `e_∅`
    /// (the angle-character domain).
    pub star_lines_in_e7a: bool,
    /// The six cycle lines land in the intersection of the two (the `D₆`
    /// part).
    pub cycle_lines_in_d6: bool,
    /// The cycle targets are fixed by the duality involution.
    pub cycle_lines_duality_fixed: bool,
}

const LENGTH_LABELS: [&str; 7] = [
    "length/face-234",
    "length/face-134",
    "length/face-124",
    "length/face-123",
    "length/cycle-1234",
    "length/cycle-1243",
    "length/cycle-1324",
];

const ANGLE_LABELS: [&str; 7] = [
    "angle/star-1",
    "angle/star-2",
    "angle/star-3",
    "angle/star-4",
    "angle/cycle-1234",
    "angle/cycle-1243",
    "angle/cycle-1324",
];

/// Verify the fourteen identities for an arbitrary bundle class: construct
/// the section-chain assignment, build its chain marking, project each
/// section-class difference, and compare with the root targets.
pub fn chain_identity_report(bundle: &PicClass) -> Result<IdentityReport> {
    let assignment = chain_assignment(bundle)?;
    let iso = chain_marking(&assignment)?;
    let b1 = assignment.meets_f11();
    let b2 = assignment.meets_f21();
    let mut lines = Vec::with_capacity(14);
    for (i, (&label, &target)) in LENGTH_LABELS.iter().zip(&length_targets()).enumerate() {
        let projected = iso.project(&(b1[i] - b1[7]))?;
        lines.push(IdentityLine {
            label,
            target,
            projected,
            holds: projected == target,
        });
    }
    for (i, (&label, &target)) in ANGLE_LABELS.iter().zip(&angle_targets()).enumerate() {
        let projected = iso.project(&(b2[7] - b2[i]))?;
        lines.push(IdentityLine {
            label,
            target,
            projected,
            holds: projected == target,
        });
    }

    let e_full = LatticeVec::basis(AffPoint::Full);
    let e_void = LatticeVec::basis(AffPoint::Empty);
    let faces = &lines[0..4];
    let stars = &lines[7..11];
    let cycles: Vec<&IdentityLine> = lines[4..7].iter().chain(&lines[11..14]).collect();
    let report = IdentityReport {
        all_hold: lines.iter().all(|l| l.holds),
        targets_are_roots: lines.iter().all(|l| l.target.is_root()),
        face_lines_in_e7l: faces.iter().all(|l| l.target.inner(&e_full) == 0),
        star_lines_in_e7a: stars.iter().all(|l| l.target.inner(&e_void) == 0),
        cycle_lines_in_d6: cycles
            .iter()
            .all(|l| l.target.inner(&e_full) == 0 && l.target.inner(&e_void) == 0),
        cycle_lines_duality_fixed: cycles.iter().all(|l| l.target.duality_d() == l.target),
        assignment,
        lines,
    };
    Ok(report)
}

/// Verify the fourteen identities for the first-ruling bundle class — the
/// distinguished case tying the chain marking to the length and angle
/// characters.
pub fn verify_chain_identities() -> Result<IdentityReport> {
    chain_identity_report(&PicClass::ruling_l())
}
