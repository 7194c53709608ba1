//! Divisor-class bookkeeping for the two surfaces attached to a marked
//! tetrahedron: the blow-up of the quadric in the twelve edge points, and
//! the conic-bundle surface obtained by blowing four disjoint (-1)-classes
//! back down.
//!
//! Classes are integer vectors in fixed bases.  On the blow-up the basis is
//! the two ruling hyperplane classes `L, R` followed by the twelve
//! exceptional classes `E_ij` (`i ≠ j`, lexicographic); on the blown-down
//! surface it is the two rulings `l, r` followed by the eight classes
//! `u_ij` with `{i,j}` neither `{1,2}` nor `{3,4}`.  Both intersection
//! pairings are diagonal outside a single hyperbolic `L·R = 1` (resp.
//! `l·r = 1`) block, with every exceptional/`u` class of self-intersection
//! `-1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The twelve ordered pairs `(i, j)`, `i ≠ j`, in lexicographic order; the
/// exceptional classes of the blow-up are indexed by these.
pub const E_LABELS: [(u8, u8); 12] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 1),
    (2, 3),
    (2, 4),
    (3, 1),
    (3, 2),
    (3, 4),
    (4, 1),
    (4, 2),
    (4, 3),
];

/// The eight ordered pairs indexing the `u` classes of the blown-down
/// surface: all `(i, j)` with `i ≠ j` and `{i, j}` neither `{1, 2}` nor
/// `{3, 4}`, in the fixed basis order.
pub const U_LABELS: [(u8, u8); 8] = [
    (1, 3),
    (3, 1),
    (1, 4),
    (4, 1),
    (2, 3),
    (3, 2),
    (2, 4),
    (4, 2),
];

fn e_position(i: u8, j: u8) -> usize {
    E_LABELS
        .iter()
        .position(|&p| p == (i, j))
        .expect("exceptional label must be an ordered pair of distinct vertices in 1..=4")
}

fn u_position(i: u8, j: u8) -> usize {
    U_LABELS
        .iter()
        .position(|&p| p == (i, j))
        .unwrap_or_else(|| {
            panic!("no u class with label ({i}, {j}): the pair must be distinct vertices not {{1,2}} or {{3,4}}")
        })
}

// ---------------------------------------------------------------------------
// Classes on the blow-up of the quadric
// ---------------------------------------------------------------------------

/// A divisor class on the quadric blown up in the twelve edge points,
/// stored as integer coordinates over `[L, R, E_12, E_13, …, E_43]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RTClass {
    coeffs: [i64; 14],
}

impl RTClass {
    /// The zero class.
    pub const ZERO: RTClass = RTClass { coeffs: [0; 14] };

    /// Build a class from raw coordinates in the fixed basis order.
    pub fn from_coeffs(coeffs: [i64; 14]) -> RTClass {
        RTClass { coeffs }
    }

    /// The raw coordinates in the fixed basis order.
    pub fn coeffs(&self) -> [i64; 14] {
        self.coeffs
    }

    /// The hyperplane class of the first ruling, `[L]`.
    pub fn ruling_l() -> RTClass {
        let mut c = RTClass::ZERO;
        c.coeffs[0] = 1;
        c
    }

    /// The hyperplane class of the second ruling, `[R]`.
    pub fn ruling_r() -> RTClass {
        let mut c = RTClass::ZERO;
        c.coeffs[1] = 1;
        c
    }

    /// The exceptional class `[E_ij]` over the edge point with ordered
    /// label `(i, j)`.
    pub fn exceptional(i: u8, j: u8) -> RTClass {
        let mut c = RTClass::ZERO;
        c.coeffs[2 + e_position(i, j)] = 1;
        c
    }
}

/// The intersection pairing on the blow-up: `L² = R² = 0`, `L·R = 1`,
/// `E_ij² = -1`, and all other products vanish.
pub fn rt_pairing(a: &RTClass, b: &RTClass) -> i64 {
    let (x, y) = (a.coeffs, b.coeffs);
    x[0] * y[1] + x[1] * y[0] - (2..14).map(|k| x[k] * y[k]).sum::<i64>()
}

// ---------------------------------------------------------------------------
// Classes on the blown-down conic-bundle surface
// ---------------------------------------------------------------------------

/// A divisor class on the blown-down surface, stored as integer coordinates
/// over `[l, r, u_13, u_31, u_14, u_41, u_23, u_32, u_24, u_42]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PicClass {
    coeffs: [i64; 10],
}

impl PicClass {
    /// The zero class.
    pub const ZERO: PicClass = PicClass { coeffs: [0; 10] };

    /// Build a class from raw coordinates in the fixed basis order.
    pub fn from_coeffs(coeffs: [i64; 10]) -> PicClass {
        PicClass { coeffs }
    }

    /// The raw coordinates in the fixed basis order.
    pub fn coeffs(&self) -> [i64; 10] {
        self.coeffs
    }

    /// The first ruling class `l` (image of `[L] + [R] - [E_12] - [E_34]`).
    pub fn ruling_l() -> PicClass {
        let mut c = PicClass::ZERO;
        c.coeffs[0] = 1;
        c
    }

    /// The second ruling class `r` (image of `[L] + [R] - [E_12] - [E_43]`).
    pub fn ruling_r() -> PicClass {
        let mut c = PicClass::ZERO;
        c.coeffs[1] = 1;
        c
    }

    /// The class `u_ij`; panics unless `(i, j)` is one of the eight valid
    /// labels.
    pub fn u(i: u8, j: u8) -> PicClass {
        let mut c = PicClass::ZERO;
        c.coeffs[2 + u_position(i, j)] = 1;
        c
    }

    /// The canonical class `K = -2l - 2r + Σ u_ij`; `K² = 0`.
    pub fn canonical_class() -> PicClass {
        let mut coeffs = [1i64; 10];
        coeffs[0] = -2;
        coeffs[1] = -2;
        PicClass { coeffs }
    }

    /// The conic-fiber class `f = -K`, the anticanonical class of the
    /// bundle; `f² = 0` and `f·u_ij = 1`.
    pub fn fiber_class() -> PicClass {
        -PicClass::canonical_class()
    }
}

/// The intersection pairing on the blown-down surface: `l² = r² = 0`,
/// `l·r = 1`, `u_ij² = -1`, and all other products vanish.  (A pairing
/// table in circulation shows one asymmetric `u·u = -1` entry; the pairing
/// here is the symmetric one forced by the classes being disjoint
/// `(-1)`-curves, under which all stated self-intersections and the
/// canonical-class identities check out.)
pub fn pic_pairing(a: &PicClass, b: &PicClass) -> i64 {
    let (x, y) = (a.coeffs, b.coeffs);
    x[0] * y[1] + x[1] * y[0] - (2..10).map(|k| x[k] * y[k]).sum::<i64>()
}

// ---------------------------------------------------------------------------
// Arithmetic and display
// ---------------------------------------------------------------------------

macro_rules! class_ops {
    ($ty:ident, $n:expr) => {
        impl std::ops::Add for $ty {
            type Output = $ty;
            fn add(self, o: $ty) -> $ty {
                let mut coeffs = self.coeffs;
                for k in 0..$n {
                    coeffs[k] += o.coeffs[k];
                }
                $ty { coeffs }
            }
        }
        impl std::ops::Sub for $ty {
            type Output = $ty;
            fn sub(self, o: $ty) -> $ty {
                let mut coeffs = self.coeffs;
                for k in 0..$n {
                    coeffs[k] -= o.coeffs[k];
                }
                $ty { coeffs }
            }
        }
        impl std::ops::Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty {
                    coeffs: self.coeffs.map(|x| -x),
                }
            }
        }
        impl std::ops::Mul<i64> for $ty {
            type Output = $ty;
            fn mul(self, s: i64) -> $ty {
                $ty {
                    coeffs: self.coeffs.map(|x| s * x),
                }
            }
        }
    };
}

class_ops!(RTClass, 14);
class_ops!(PicClass, 10);

fn write_combination(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i64, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, name) in terms {
        if c == 0 {
            continue;
        }
        if first {
            if c < 0 {
                f.write_str("-")?;
            }
            first = false;
        } else {
            f.write_str(if c < 0 { "-" } else { "+" })?;
        }
        if c.abs() != 1 {
            write!(f, "{}", c.abs())?;
        }
        write!(f, "{name}")?;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for RTClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = std::iter::once("L".to_string())
            .chain(std::iter::once("R".to_string()))
            .chain(E_LABELS.iter().map(|&(i, j)| format!("E{i}{j}")));
        write_combination(f, self.coeffs.iter().copied().zip(names))
    }
}

impl fmt::Debug for RTClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = std::iter::once("l".to_string())
            .chain(std::iter::once("r".to_string()))
            .chain(U_LABELS.iter().map(|&(i, j)| format!("u{i}{j}")));
        write_combination(f, self.coeffs.iter().copied().zip(names))
    }
}

impl fmt::Debug for PicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// ---------------------------------------------------------------------------
// Blow-down
// ---------------------------------------------------------------------------

/// The four pairwise-orthogonal `(-1)`-classes that are contracted to pass
/// from the blow-up to the conic-bundle surface, in a fixed order.
pub fn blown_down_classes() -> [RTClass; 4] {
    let line_l = RTClass::ruling_l();
    let line_r = RTClass::ruling_r();
    [
        RTClass::exceptional(2, 1),
        line_l - RTClass::exceptional(1, 2),
        line_r - RTClass::exceptional(1, 2),
        line_l + line_r
            - RTClass::exceptional(3, 4)
            - RTClass::exceptional(4, 3)
            - RTClass::exceptional(1, 2),
    ]
}

/// Embed a blown-down basis class back into the blow-up lattice.
fn embed(k: usize) -> RTClass {
    let line_l = RTClass::ruling_l();
    let line_r = RTClass::ruling_r();
    match k {
        0 => line_l + line_r - RTClass::exceptional(1, 2) - RTClass::exceptional(3, 4),
        1 => line_l + line_r - RTClass::exceptional(1, 2) - RTClass::exceptional(4, 3),
        k => {
            let (i, j) = U_LABELS[k - 2];
            RTClass::exceptional(i, j)
        }
    }
}

/// Push a blow-up class down to the conic-bundle surface.
///
/// The pushforward is the orthogonal projection away from the four
/// contracted classes, `c ↦ c + Σ (c·N_k) N_k`, which is always integral;
/// on the orthogonal complement of the `N_k` it is a pairing-preserving
/// isomorphism onto the blown-down lattice.  Coordinates come straight from
/// pairings against the embedded basis (the Gram matrix is its own inverse
/// up to the `l↔r` swap), with a reconstruction check guarding the
/// embedding table.
pub fn blow_down(c: &RTClass) -> PicClass {
    let contracted = blown_down_classes();
    let mut p = *c;
    for n in contracted {
        p = p + n * rt_pairing(c, &n);
    }
    let mut coeffs = [0i64; 10];
    coeffs[0] = rt_pairing(&p, &embed(1));
    coeffs[1] = rt_pairing(&p, &embed(0));
    for k in 2..10 {
        coeffs[k] = -rt_pairing(&p, &embed(k));
    }
    let result = PicClass { coeffs };
    debug_assert_eq!(
        (0..10).fold(RTClass::ZERO, |acc, k| acc + embed(k) * coeffs[k]),
        p,
        "projection must land in the span of the embedded basis"
    );
    result
}

/// Blow down a class that must already be orthogonal to all four contracted
/// classes; errors with the offending pairings otherwise.
pub fn blow_down_strict(c: &RTClass) -> Result<PicClass> {
    let bad: Vec<String> = blown_down_classes()
        .iter()
        .enumerate()
        .filter_map(|(k, n)| {
            let p = rt_pairing(c, n);
            (p != 0).then(|| format!("c·N{} = {}", k + 1, p))
        })
        .collect();
    if !bad.is_empty() {
        return Err(Error::NotInComplement(format!(
            "class {c} pairs nontrivially with the contracted classes: {}",
            bad.join(", ")
        )));
    }
    Ok(blow_down(c))
}

// ---------------------------------------------------------------------------
// Fiber components of the two reducible conic fibers
// ---------------------------------------------------------------------------

/// The component classes of the two reducible fibers of the conic bundle:
/// `f11 + f12` and `f21 + f22` are both the fiber class, each component has
/// self-intersection `-2`, and components of the same fiber meet in `2`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FiberComponents {
    pub f11: PicClass,
    pub f12: PicClass,
    pub f21: PicClass,
    pub f22: PicClass,
}

/// Strict transform on the blow-up of the conic cut on the quadric by the
/// face plane opposite vertex `k`: the hyperplane class `L + R` minus the
/// two exceptional classes over each edge point of the three edges joining
/// the remaining vertices.
fn face_conic_transform(k: u8) -> RTClass {
    let mut c = RTClass::ruling_l() + RTClass::ruling_r();
    let others: Vec<u8> = (1..=4).filter(|&v| v != k).collect();
    for a in 0..3 {
        for b in a + 1..3 {
            c = c - RTClass::exceptional(others[a], others[b])
                - RTClass::exceptional(others[b], others[a]);
        }
    }
    c
}

/// Compute the four fiber-component classes from the incidence geometry
/// (pushforwards of the strict transforms of the four face conics) and
/// cross-check every expected intersection number.
///
/// The components pair to `0` across the two reducible fibers, as disjoint
/// curves in distinct fibers must; a published intersection table lists one
/// such cross pair as `1`, which is inconsistent with `f² = 0` and is
/// corrected here.
pub fn fiber_component_classes() -> Result<FiberComponents> {
    // Face plane k passes through the three vertices other than k.  The
    // conics in the planes through vertex pairs {1,2} resp. {3,4} make up
    // the two reducible fibers: planes 3 and 4 share the edge through
    // vertices 1 and 2, planes 1 and 2 the edge through 3 and 4.
    let fc = FiberComponents {
        f11: blow_down(&face_conic_transform(3)),
        f12: blow_down(&face_conic_transform(4)),
        f21: blow_down(&face_conic_transform(1)),
        f22: blow_down(&face_conic_transform(2)),
    };
    let f = PicClass::fiber_class();
    let checks: [(&str, bool); 7] = [
        ("f11 + f12 = f", fc.f11 + fc.f12 == f),
        ("f21 + f22 = f", fc.f21 + fc.f22 == f),
        (
            "components have self-intersection -2",
            [fc.f11, fc.f12, fc.f21, fc.f22]
                .iter()
                .all(|c| pic_pairing(c, c) == -2),
        ),
        (
            "components of one fiber meet in 2",
            pic_pairing(&fc.f11, &fc.f12) == 2 && pic_pairing(&fc.f21, &fc.f22) == 2,
        ),
        (
            "components of distinct fibers are disjoint",
            [fc.f21, fc.f22]
                .iter()
                .all(|c| pic_pairing(&fc.f11, c) == 0 && pic_pairing(&fc.f12, c) == 0),
        ),
        (
            "fiber components are orthogonal to the fiber class",
            [fc.f11, fc.f12, fc.f21, fc.f22]
                .iter()
                .all(|c| pic_pairing(c, &f) == 0),
        ),
        (
            "adjunction: rational components",
            [fc.f11, fc.f12, fc.f21, fc.f22].iter().all(|c| {
                pic_pairing(c, c) + pic_pairing(c, &PicClass::canonical_class()) == -2
            }),
        ),
    ];
    for (what, ok) in checks {
        if !ok {
            return Err(Error::ConsistencyFailure(format!(
                "fiber-component cross-check failed: {what}"
            )));
        }
    }
    Ok(fc)
}

/// Signature `(positive, negative)` of the intersection pairing on the
/// blow-up: `(1, 13)`, one hyperbolic direction plus the contracted and
/// exceptional classes.
pub fn rt_signature() -> (usize, usize) {
    let basis: Vec<RTClass> = (0..14)
        .map(|k| {
            let mut c = [0i64; 14];
            c[k] = 1;
            RTClass::from_coeffs(c)
        })
        .collect();
    let gram: Vec<Vec<i64>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| rt_pairing(a, b)).collect())
        .collect();
    super::exact::signature(&gram)
}

/// Signature `(positive, negative)` of the intersection pairing on the
/// blown-down surface: `(1, 9)`.
pub fn pic_signature() -> (usize, usize) {
    let basis: Vec<PicClass> = (0..10)
        .map(|k| {
            let mut c = [0i64; 10];
            c[k] = 1;
            PicClass::from_coeffs(c)
        })
        .collect();
    let gram: Vec<Vec<i64>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| pic_pairing(a, b)).collect())
        .collect();
    super::exact::signature(&gram)
}

// ---------------------------------------------------------------------------
// Coarse classification
// ---------------------------------------------------------------------------

/// Coarse position of a class relative to the conic bundle structure.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum ClassKind {
    /// `c² = -1`, `c·f = 1`: a section of the bundle.
    Section,
    /// `c² = -2`, `c·f = 0`: a component of a reducible fiber.
    FiberComponent,
    /// `c = k·f`: a multiple of the fiber class.
    Fiber {
        /// The multiple, negative for multiples of the canonical class.
        multiple: i64,
    },
    /// Anything else.
    Other,
}

/// Classify a divisor class by its self-intersection and degree over the
/// base of the conic bundle.
pub fn classify(c: &PicClass) -> ClassKind {
    let f = PicClass::fiber_class();
    // k·f has l-coefficient 2k, so the candidate multiple is half of it
    if c.coeffs[0] % 2 == 0 && f * (c.coeffs[0] / 2) == *c {
        return ClassKind::Fiber {
            multiple: c.coeffs[0] / 2,
        };
    }
    match (pic_pairing(c, c), pic_pairing(c, &f)) {
        (-1, 1) => ClassKind::Section,
        (-2, 0) => ClassKind::FiberComponent,
        _ => ClassKind::Other,
    }
}
