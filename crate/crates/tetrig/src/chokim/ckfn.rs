//! The degree-4 rational function of a configuration, its level-one
//! quadratic, and the Möbius map intertwining the length-side and angle-side
//! functions.
//!
//! The function is stored by its zeros and poles — never by expanded
//! coefficients — because the zero/pole values are the geometrically
//! meaningful data and expansion loses accuracy. The single expansion the
//! module does perform (numerator minus denominator, to locate the points
//! where the function equals 1) uses compensated summation: the elementary
//! symmetric differences suffer real cancellation when the configuration is
//! nearly symmetric.

use num_complex::Complex64 as Cx;
use serde::{Deserialize, Serialize};

use super::config::Config8;
use crate::error::{Error, Result};
use crate::projgeom::{MobiusMap, ProjPoint1};
use crate::tol;

/// A monic-over-monic degree-4 rational function `Π(t−zᵢ) / Π(t−qᵢ)` with
/// the basepoint pole (always 1) stored first.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CKFn {
    zeros: [Cx; 4],
    poles: [Cx; 4],
}

impl CKFn {
    /// Validate and store a zero/pole system. `poles[0]` must be the
    /// basepoint 1, and no zero may collide with a pole (repeats *within*
    /// the zeros or within the poles are legitimate — highly symmetric
    /// tetrahedra produce them).
    pub fn new(zeros: [Cx; 4], poles: [Cx; 4]) -> Result<CKFn> {
        if (poles[0] - Cx::new(1.0, 0.0)).norm() > tol::PROJ_EQ {
            return Err(Error::InvalidInput(format!(
                "leading pole must be the basepoint 1, got {}",
                poles[0]
            )));
        }
        for (i, z) in zeros.iter().enumerate() {
            for (j, q) in poles.iter().enumerate() {
                if (z - q).norm() <= tol::PROJ_EQ * (1.0 + z.norm() + q.norm()) {
                    return Err(Error::ZeroPoleCollision(format!(
                        "zero {i} ({z}) meets pole {j} ({q})"
                    )));
                }
            }
        }
        Ok(CKFn { zeros, poles })
    }

    pub fn zeros(&self) -> &[Cx; 4] {
        &self.zeros
    }

    pub fn poles(&self) -> &[Cx; 4] {
        &self.poles
    }

    /// Homogeneous evaluation: numerator and denominator as a point of
    /// `P¹`, valid at poles and at `t = ∞` (where the value is 1).
    pub(crate) fn eval_point(&self, p: &ProjPoint1) -> ProjPoint1 {
        let (z0, z1) = (p.z0, p.z1);
        let mut num = Cx::new(1.0, 0.0);
        let mut den = Cx::new(1.0, 0.0);
        for k in 0..4 {
            num *= z0 - self.zeros[k] * z1;
            den *= z0 - self.poles[k] * z1;
        }
        ProjPoint1::new(num, den)
    }
}

/// Package a configuration into its rational function: zeros at the four
/// face values, poles at the basepoint and the three closed-walk values.
pub fn ck_from_config(c: &Config8) -> Result<CKFn> {
    let v = c.finite_values()?;
    CKFn::new([v[1], v[2], v[3], v[4]], [v[0], v[5], v[6], v[7]])
}

/// Evaluate at a finite argument (the result may overflow to `∞` at a pole).
pub fn evaluate_ck(f: &CKFn, t: Cx) -> Cx {
    let mut num = Cx::new(1.0, 0.0);
    let mut den = Cx::new(1.0, 0.0);
    for k in 0..4 {
        num *= t - f.zeros[k];
        den *= t - f.poles[k];
    }
    num / den
}

/// The two non-forced points where the function takes the value 1.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct PrincipalPair {
    pub p1: Cx,
    pub p2: Cx,
}

/// Neumaier-compensated sum, componentwise over real and imaginary parts.
fn compensated_sum(terms: &[Cx]) -> Cx {
    fn neumaier(xs: impl Iterator<Item = f64>) -> f64 {
        let (mut s, mut c) = (0.0, 0.0);
        for x in xs {
            let t = s + x;
            if s.abs() >= x.abs() {
                c += (s - t) + x;
            } else {
                c += (x - t) + s;
            }
            s = t;
        }
        s + c
    }
    Cx::new(
        neumaier(terms.iter().map(|t| t.re)),
        neumaier(terms.iter().map(|t| t.im)),
    )
}

struct LevelOneCubic {
    /// Coefficients of `numerator − denominator = −a·t³ + b·t² − c·t + c0`.
    a: Cx,
    b: Cx,
    c: Cx,
    c0: Cx,
    /// Magnitude scale of the two degree-4 products, for judging `c0 ≈ 0`.
    product_scale: f64,
}

fn level_one_cubic(f: &CKFn) -> LevelOneCubic {
    let z = &f.zeros;
    let q = &f.poles;
    // Elementary-symmetric differences, each accumulated as one compensated
    // sum so that cancellation between the zero side and the pole side is
    // absorbed by the compensation term.
    let mut t1 = Vec::with_capacity(8);
    let mut t2 = Vec::with_capacity(12);
    let mut t3 = Vec::with_capacity(8);
    for i in 0..4 {
        t1.push(z[i]);
        t1.push(-q[i]);
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            t2.push(z[i] * z[j]);
            t2.push(-(q[i] * q[j]));
        }
    }
    for i in 0..4 {
        // Triple products = product over all but index i.
        let mut pz = Cx::new(1.0, 0.0);
        let mut pq = Cx::new(1.0, 0.0);
        for j in 0..4 {
            if j != i {
                pz *= z[j];
                pq *= q[j];
            }
        }
        t3.push(pz);
        t3.push(-pq);
    }
    let e4z = z.iter().product::<Cx>();
    let e4q = q.iter().product::<Cx>();
    LevelOneCubic {
        a: compensated_sum(&t1),
        b: compensated_sum(&t2),
        c: compensated_sum(&t3),
        c0: compensated_sum(&[e4z, -e4q]),
        product_scale: e4z.norm() + e4q.norm(),
    }
}

/// Coefficients `[a, b, c]` of the level-one quadratic `a·t² − b·t + c`
/// (numerator minus denominator, with the forced root at 0 divided out).
///
/// Fails when the zero/pole products do not cancel — then 0 is not a root
/// and the quadratic does not exist.
pub fn level_one_quadratic(f: &CKFn) -> Result<[Cx; 3]> {
    let cubic = level_one_cubic(f);
    if cubic.c0.norm() > 1e-6 * (cubic.product_scale + 1.0) {
        return Err(Error::InvalidInput(format!(
            "zero product differs from pole product by {:.3e}; \
             the level-one set has no forced root at 0",
            cubic.c0.norm()
        )));
    }
    Ok([cubic.a, cubic.b, cubic.c])
}

/// Solve for the two non-forced level-one points.
///
/// The function takes the value 1 at 0, at ∞, and at the two roots of the
/// level-one quadratic; those roots are the principal parameters. The
/// quadratic is rejected as degenerate when its (normalized) discriminant
/// vanishes — equivalently, when the symmetric determinant of the underlying
/// character vanishes — and also when a root collapses onto the forced
/// level-one points 0 or ∞.
pub fn principal_parameters(f: &CKFn) -> Result<PrincipalPair> {
    let [a, b, c] = level_one_quadratic(f)?;
    let scale = a.norm().max(b.norm()).max(c.norm());
    if scale == 0.0 {
        return Err(Error::DegenerateQuadratic { disc: 0.0 });
    }
    let disc = b * b - 4.0 * a * c;
    let norm_disc = disc.norm() / (scale * scale);
    if norm_disc < 1e-10 || a.norm() < 1e-10 * scale || c.norm() < 1e-10 * scale {
        return Err(Error::DegenerateQuadratic { disc: norm_disc });
    }
    // Align the square root with b so that b + s never cancels, then take
    // the companion root from the product c/a (Viète).
    let mut s = disc.sqrt();
    if (b.conj() * s).re < 0.0 {
        s = -s;
    }
    let pair = PrincipalPair {
        p1: (b + s) / (2.0 * a),
        p2: 2.0 * c / (b + s),
    };
    // Defensive: both roots must genuinely sit on the level-one set.
    for p in [pair.p1, pair.p2] {
        let v = evaluate_ck(f, p);
        if !v.is_finite() || (v - Cx::new(1.0, 0.0)).norm() > 1e-5 * (1.0 + v.norm()) {
            return Err(Error::ConsistencyFailure(format!(
                "level-one root {p} evaluates to {v}, not 1"
            )));
        }
    }
    Ok(pair)
}

/// The closed-form candidate `t ↦ (t−p₁)(1−p₂) / ((t−p₂)(1−p₁))`.
pub(crate) fn closed_form_map(p1: Cx, p2: Cx) -> MobiusMap {
    let one = Cx::new(1.0, 0.0);
    MobiusMap {
        a: one - p2,
        b: -p1 * (one - p2),
        c: one - p1,
        d: -p2 * (one - p1),
    }
}

/// Fixed probe arguments for verifying an intertwining identity: spread over
/// the sphere, including 0 and ∞ (both forced level-one points).
fn probes() -> [ProjPoint1; 7] {
    [
        ProjPoint1::from_real(0.0),
        ProjPoint1::new(Cx::new(1.0, 0.0), Cx::new(0.0, 0.0)),
        ProjPoint1::from_real(2.0),
        ProjPoint1::from_real(-1.0),
        ProjPoint1::from_value(Cx::new(0.0, 1.0)),
        ProjPoint1::from_value(Cx::new(1.0, 2.0)),
        ProjPoint1::from_value(Cx::new(0.7, -0.4)),
    ]
}

/// Worst chordal mismatch of `ck_l(t)` against `ck_a(m(t))` over the probes.
fn intertwining_residual(ck_l: &CKFn, ck_a: &CKFn, m: &MobiusMap) -> f64 {
    probes()
        .iter()
        .map(|t| {
            let lhs = ck_l.eval_point(t);
            let rhs = ck_a.eval_point(&m.apply(t));
            lhs.chordal(&rhs)
        })
        .fold(0.0, f64::max)
}

/// Both closed-form candidates (the two orders of the principal pair of the
/// length-side function), each with its intertwining residual.
pub fn psi_candidates(ck_l: &CKFn, ck_a: &CKFn) -> Result<[(MobiusMap, f64); 2]> {
    let pp = principal_parameters(ck_l)?;
    let m1 = closed_form_map(pp.p1, pp.p2);
    let m2 = closed_form_map(pp.p2, pp.p1);
    let r1 = intertwining_residual(ck_l, ck_a, &m1);
    let r2 = intertwining_residual(ck_l, ck_a, &m2);
    Ok([(m1, r1), (m2, r2)])
}

/// The Möbius map `ψ` with `ck_l = ck_a ∘ ψ`.
///
/// `ψ` has the closed form `(t−p₁)(1−p₂)/((t−p₂)(1−p₁))` for one order of
/// the principal parameters of `ck_l`; both orders are tried and the one
/// verifying the identity at seven probe points is returned. When the two
/// functions have identical zero/pole systems the identity map already
/// intertwines and is returned directly.
pub fn psi(ck_l: &CKFn, ck_a: &CKFn) -> Result<MobiusMap> {
    if same_system(ck_l, ck_a) {
        return Ok(MobiusMap::identity());
    }
    let cands = psi_candidates(ck_l, ck_a)?;
    let (m, r) = cands
        .iter()
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .expect("two candidates");
    if *r > tol::PSI_VERIFY {
        return Err(Error::NoVerifyingOrder { best: *r });
    }
    Ok(*m)
}

/// Do the two functions have the same zeros and poles as multisets?
fn same_system(f: &CKFn, g: &CKFn) -> bool {
    fn multiset_match(a: &[Cx; 4], b: &[Cx; 4]) -> bool {
        let mut used = [false; 4];
        'outer: for x in a {
            for (k, y) in b.iter().enumerate() {
                if !used[k] && (x - y).norm() <= tol::PROJ_EQ * (1.0 + x.norm() + y.norm()) {
                    used[k] = true;
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }
    multiset_match(&f.zeros, &g.zeros) && multiset_match(&f.poles, &g.poles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chokim::config::{config_from_hom, Config8};
    use crate::e8lattice::AffPoint;
    use crate::tetra::{
        angle_function, det_l, length_function, CharacterHom, Geometry, MarkedTetra, MetricSpec,
        SubLattice,
    };
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn all_right_tetra() -> MarkedTetra {
        let spec = MetricSpec::new(Geometry::Spherical, [std::f64::consts::FRAC_PI_2; 6]);
        MarkedTetra::from_metric(&spec).unwrap()
    }

    fn random_length_hom(rng: &mut StdRng) -> CharacterHom {
        let one = Cx::new(1.0, 0.0);
        let mut half = [one; 8];
        for s in AffPoint::EDGES {
            let v = loop {
                let v = Cx::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
                if v.norm() > 0.25 {
                    break v;
                }
            };
            half[s.index()] = v;
        }
        CharacterHom::new(SubLattice::E7L, half)
    }

    fn close(a: Cx, b: Cx, tolerance: f64) -> bool {
        (a - b).norm() <= tolerance * (1.0 + a.norm().max(b.norm()))
    }

    /// The octant tetrahedron: angle-side function `(t−i)⁴/(t−1)⁴`,
    /// length-side function `(t+i)⁴/(t−1)⁴`.
    #[test]
    fn all_right_functions_are_the_quartic_ratios() {
        let t = all_right_tetra();
        let cka = ck_from_config(&config_from_hom(&angle_function(&t).unwrap()).unwrap()).unwrap();
        let ckl = ck_from_config(&config_from_hom(&length_function(&t).unwrap()).unwrap()).unwrap();
        let (i, one) = (Cx::new(0.0, 1.0), Cx::new(1.0, 0.0));
        for k in 0..4 {
            assert!(close(cka.zeros()[k], i, tol::EXACT_CASE));
            assert!(close(cka.poles()[k], one, tol::EXACT_CASE));
            assert!(close(ckl.zeros()[k], -i, tol::EXACT_CASE));
            assert!(close(ckl.poles()[k], one, tol::EXACT_CASE));
        }
    }

    /// Principal parameters of the octant angle-side function: `1+i` and
    /// `(1+i)/2`.
    #[test]
    fn all_right_angle_side_principal_parameters() {
        let t = all_right_tetra();
        let cka = ck_from_config(&config_from_hom(&angle_function(&t).unwrap()).unwrap()).unwrap();
        let pp = principal_parameters(&cka).unwrap();
        let expect = [Cx::new(1.0, 1.0), Cx::new(0.5, 0.5)];
        let hit = (close(pp.p1, expect[0], tol::EXACT_CASE) && close(pp.p2, expect[1], tol::EXACT_CASE))
            || (close(pp.p1, expect[1], tol::EXACT_CASE) && close(pp.p2, expect[0], tol::EXACT_CASE));
        assert!(hit, "got {} and {}", pp.p1, pp.p2);
    }

    /// The intertwining map of the octant tetrahedron is the closed-form
    /// map `t ↦ ((1+i)t − 1)/(t − (1−i))`; the map printed with the numerator
    /// and denominator roles swapped satisfies the *reversed* composition.
    #[test]
    fn all_right_intertwiner_and_its_reverse() {
        let t = all_right_tetra();
        let cka = ck_from_config(&config_from_hom(&angle_function(&t).unwrap()).unwrap()).unwrap();
        let ckl = ck_from_config(&config_from_hom(&length_function(&t).unwrap()).unwrap()).unwrap();
        let m = psi(&ckl, &cka).unwrap();
        let expected = MobiusMap {
            a: Cx::new(1.0, 1.0),
            b: Cx::new(-1.0, 0.0),
            c: Cx::new(1.0, 0.0),
            d: Cx::new(-1.0, 1.0),
        };
        assert!(m.approx_eq(&expected, tol::EXACT_CASE), "ψ = {m:?}");
        // The inverse map intertwines the two functions in the opposite
        // order: ck_a = ck_l ∘ ψ⁻¹.
        let rev = m.inverse();
        assert!(intertwining_residual(&cka, &ckl, &rev) < tol::PSI_VERIFY);
    }

    #[test]
    fn identical_functions_are_intertwined_by_the_identity() {
        let mut rng = StdRng::seed_from_u64(31);
        let hom = random_length_hom(&mut rng);
        let ck = ck_from_config(&config_from_hom(&hom).unwrap()).unwrap();
        let m = psi(&ck, &ck.clone()).unwrap();
        assert!(m.approx_eq(&MobiusMap::identity(), 1e-12));
    }

    /// ψ maps the level-one set of the length side ({0, ∞, p₁, p₂}) into
    /// the level-one set of the angle side.
    #[test]
    fn psi_transports_the_level_one_set() {
        let spec = MetricSpec::new(Geometry::Hyperbolic, [0.7, 0.9, 1.1, 1.3, 0.8, 1.2]);
        let t = MarkedTetra::from_metric(&spec).unwrap();
        let ckl = ck_from_config(&config_from_hom(&length_function(&t).unwrap()).unwrap()).unwrap();
        let cka = ck_from_config(&config_from_hom(&angle_function(&t).unwrap()).unwrap()).unwrap();
        let m = psi(&ckl, &cka).unwrap();
        let pp = principal_parameters(&ckl).unwrap();
        let level = [
            ProjPoint1::from_real(0.0),
            ProjPoint1::new(Cx::new(1.0, 0.0), Cx::new(0.0, 0.0)),
            ProjPoint1::from_value(pp.p1),
            ProjPoint1::from_value(pp.p2),
        ];
        for t0 in &level {
            let image = m.apply(t0);
            let v = cka.eval_point(&image);
            assert!(
                v.chordal(&ProjPoint1::from_real(1.0)) < tol::PSI_VERIFY,
                "image of level-one point is not level-one"
            );
        }
    }

    /// Exactly one principal-pair order verifies the identity on generic
    /// metric input, in both geometries.
    #[test]
    fn exactly_one_order_verifies_on_generic_input() {
        for spec in [
            MetricSpec::new(Geometry::Hyperbolic, [0.7, 0.9, 1.1, 1.3, 0.8, 1.2]),
            MetricSpec::new(Geometry::Spherical, [0.83, 0.91, 1.07, 1.19, 0.88, 1.02]),
        ] {
            let t = MarkedTetra::from_metric(&spec).unwrap();
            let ckl =
                ck_from_config(&config_from_hom(&length_function(&t).unwrap()).unwrap()).unwrap();
            let cka =
                ck_from_config(&config_from_hom(&angle_function(&t).unwrap()).unwrap()).unwrap();
            let cands = psi_candidates(&ckl, &cka).unwrap();
            let verifying = cands.iter().filter(|(_, r)| *r <= tol::PSI_VERIFY).count();
            assert_eq!(verifying, 1, "residuals {:?}", [cands[0].1, cands[1].1]);
        }
    }

    /// Level-one structure: the value at 0 and ∞ is exactly 1, the two
    /// quadratic roots evaluate to 1, and zero/pole products cancel.
    #[test]
    fn level_one_set_is_zero_infinity_and_the_principal_pair() {
        let mut rng = StdRng::seed_from_u64(32);
        for _ in 0..20 {
            let hom = random_length_hom(&mut rng);
            let config = config_from_hom(&hom).unwrap();
            let ck = match ck_from_config(&config) {
                Ok(f) => f,
                Err(_) => continue, // non-generic draw
            };
            let pp = match principal_parameters(&ck) {
                Ok(p) => p,
                Err(_) => continue,
            };
            let one = ProjPoint1::from_real(1.0);
            assert!(ck.eval_point(&ProjPoint1::from_real(0.0)).chordal(&one) < 1e-9);
            let inf = ProjPoint1::new(Cx::new(1.0, 0.0), Cx::new(0.0, 0.0));
            assert!(ck.eval_point(&inf).chordal(&one) < 1e-9);
            for p in [pp.p1, pp.p2] {
                assert!(p.norm() > 1e-6, "principal parameter collapsed onto 0");
                assert!(close(evaluate_ck(&ck, p), Cx::new(1.0, 0.0), 1e-7));
            }
        }
    }

    /// The discriminant of the level-one quadratic equals
    /// `16·(Π a_ij)²·det` for the character with half-values `a_ij`.
    #[test]
    fn discriminant_matches_the_determinant_identity() {
        let mut rng = StdRng::seed_from_u64(33);
        let mut checked = 0;
        while checked < 100 {
            let hom = random_length_hom(&mut rng);
            let ck = match ck_from_config(&config_from_hom(&hom).unwrap()) {
                Ok(f) => f,
                Err(_) => continue,
            };
            let [a, b, c] = level_one_quadratic(&ck).unwrap();
            let disc = b * b - 4.0 * a * c;
            let prod: Cx = AffPoint::EDGES.iter().map(|&s| hom.half_value(s)).product();
            let rhs = 16.0 * prod * prod * det_l(&hom);
            assert!(
                (disc - rhs).norm() <= 1e-8 * (1.0 + disc.norm().max(rhs.norm())),
                "disc {disc} vs 16(Πa)²·det {rhs}"
            );
            checked += 1;
        }
    }

    /// Zero and pole products agree for every configuration-derived
    /// function: each edge value enters two faces and two walks.
    #[test]
    fn zero_product_equals_pole_product() {
        let mut rng = StdRng::seed_from_u64(34);
        for _ in 0..20 {
            let hom = random_length_hom(&mut rng);
            let ck = match ck_from_config(&config_from_hom(&hom).unwrap()) {
                Ok(f) => f,
                Err(_) => continue,
            };
            let pz: Cx = ck.zeros().iter().product();
            let pq: Cx = ck.poles().iter().product();
            assert!(close(pz, pq, 1e-12), "{pz} vs {pq}");
        }
    }

    #[test]
    fn zero_pole_collisions_are_rejected() {
        let one = Cx::new(1.0, 0.0);
        let v = Cx::new(2.0, 1.0);
        // A face value equal to a walk value: zero meets pole.
        let c = Config8::from_values([
            one,
            v,
            Cx::new(3.0, 0.0),
            Cx::new(4.0, 0.0),
            Cx::new(5.0, 0.0),
            v,
            Cx::new(6.0, 0.0),
            Cx::new(7.0, 0.0),
        ]);
        assert!(matches!(
            ck_from_config(&c),
            Err(Error::ZeroPoleCollision(_))
        ));
        // The trivial character: every face value collides with the
        // basepoint pole.
        let trivial = config_from_hom(&CharacterHom::new(SubLattice::E7L, [one; 8])).unwrap();
        assert!(matches!(
            ck_from_config(&trivial),
            Err(Error::ZeroPoleCollision(_))
        ));
    }

    /// Half-values `e^{iφ_ij}` built from the pairwise angles of four unit
    /// vectors in R³: the symmetric cosine matrix is then a rank-3 Gram
    /// matrix, so its determinant — and with it the level-one
    /// discriminant — vanishes.
    #[test]
    fn degenerate_quadratic_is_detected() {
        let vs: [[f64; 3]; 4] = [
            [1.0, 0.0, 0.0],
            [0.36, 0.48, 0.8],
            [0.0, 0.6, 0.8],
            [0.48, 0.64, -0.6],
        ];
        let mut half = [Cx::new(1.0, 0.0); 8];
        for s in AffPoint::EDGES {
            let (i, j) = s.vertices().unwrap();
            let (vi, vj) = (vs[usize::from(i) - 1], vs[usize::from(j) - 1]);
            let dot: f64 = (0..3).map(|m| vi[m] * vj[m]).sum();
            half[s.index()] = Cx::new(0.0, dot.acos()).exp();
        }
        let hom = CharacterHom::new(SubLattice::E7L, half);
        assert!(
            det_l(&hom).norm() < 1e-12,
            "rank-3 cosine matrix must be singular"
        );
        let ck = ck_from_config(&config_from_hom(&hom).unwrap()).unwrap();
        assert!(matches!(
            principal_parameters(&ck),
            Err(Error::DegenerateQuadratic { .. })
        ));
    }

    /// Exact spot-check of the discriminant identity over the Gaussian
    /// rationals: both sides computed in arbitrary-precision rational
    /// arithmetic and compared for literal equality.
    #[test]
    fn discriminant_identity_holds_exactly_over_the_rationals() {
        use num_bigint::BigInt;
        use num_rational::BigRational;

        #[derive(Clone, PartialEq, Debug)]
        struct Q(BigRational, BigRational);

        fn q(re: (i64, i64), im: (i64, i64)) -> Q {
            let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
            Q(r(re.0, re.1), r(im.0, im.1))
        }
        fn int(n: i64) -> Q {
            q((n, 1), (0, 1))
        }
        fn add(x: &Q, y: &Q) -> Q {
            Q(&x.0 + &y.0, &x.1 + &y.1)
        }
        fn sub(x: &Q, y: &Q) -> Q {
            Q(&x.0 - &y.0, &x.1 - &y.1)
        }
        fn mul(x: &Q, y: &Q) -> Q {
            Q(
                &x.0 * &y.0 - &x.1 * &y.1,
                &x.0 * &y.1 + &x.1 * &y.0,
            )
        }
        fn inv(x: &Q) -> Q {
            let n = &x.0 * &x.0 + &x.1 * &x.1;
            Q(&x.0 / &n, -(&x.1 / &n))
        }
        fn prod(xs: &[&Q]) -> Q {
            xs.iter().fold(int(1), |acc, x| mul(&acc, x))
        }
        fn elem_sym(xs: &[Q], k: usize) -> Q {
            let n = xs.len();
            let mut total = int(0);
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != k {
                    continue;
                }
                let mut term = int(1);
                for (i, x) in xs.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        term = mul(&term, x);
                    }
                }
                total = add(&total, &term);
            }
            total
        }
        fn det(m: &Vec<Vec<Q>>) -> Q {
            let n = m.len();
            if n == 1 {
                return m[0][0].clone();
            }
            let mut total = int(0);
            for j in 0..n {
                let minor: Vec<Vec<Q>> = (1..n)
                    .map(|r| {
                        (0..n)
                            .filter(|&c| c != j)
                            .map(|c| m[r][c].clone())
                            .collect()
                    })
                    .collect();
                let term = mul(&m[0][j], &det(&minor));
                total = if j % 2 == 0 {
                    add(&total, &term)
                } else {
                    sub(&total, &term)
                };
            }
            total
        }

        // Six generic Gaussian-rational edge values a12..a34.
        let a = [
            q((2, 1), (0, 1)),
            q((1, 1), (1, 1)),
            q((1, 2), (0, 1)),
            q((3, 1), (0, 1)),
            q((2, 1), (-1, 1)),
            q((1, 3), (1, 1)),
        ];
        // Zeros are the four face products; poles are 1 and the three walks.
        let zeros: Vec<Q> = crate::chokim::FACE_EDGES
            .iter()
            .map(|f| prod(&[&a[f[0]], &a[f[1]], &a[f[2]]]))
            .collect();
        let mut poles = vec![int(1)];
        poles.extend(
            crate::chokim::CYCLE_EDGES
                .iter()
                .map(|c| prod(&[&a[c[0]], &a[c[1]], &a[c[2]], &a[c[3]]])),
        );
        let ca = sub(&elem_sym(&zeros, 1), &elem_sym(&poles, 1));
        let cb = sub(&elem_sym(&zeros, 2), &elem_sym(&poles, 2));
        let cc = sub(&elem_sym(&zeros, 3), &elem_sym(&poles, 3));
        let c0 = sub(&elem_sym(&zeros, 4), &elem_sym(&poles, 4));
        assert_eq!(c0, int(0), "zero and pole products must cancel exactly");
        let disc = sub(&mul(&cb, &cb), &mul(&int(4), &mul(&ca, &cc)));

        let half = inv(&int(2));
        let mut m = vec![vec![int(0); 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = int(1);
        }
        for (k, &(i, j)) in crate::tetra::EDGES.iter().enumerate() {
            let entry = mul(&half, &add(&a[k], &inv(&a[k])));
            m[i][j] = entry.clone();
            m[j][i] = entry;
        }
        let pa = prod(&[&a[0], &a[1], &a[2], &a[3], &a[4], &a[5]]);
        let rhs = mul(&int(16), &mul(&mul(&pa, &pa), &det(&m)));
        assert_eq!(disc, rhs);
    }

    #[test]
    fn evaluation_hits_zeros_and_poles() {
        let ck = CKFn::new(
            [
                Cx::new(2.0, 0.0),
                Cx::new(3.0, 0.0),
                Cx::new(0.0, 2.0),
                Cx::new(-1.0, -1.0),
            ],
            [
                Cx::new(1.0, 0.0),
                Cx::new(4.0, 0.0),
                Cx::new(0.0, -3.0),
                Cx::new(-2.0, 1.0),
            ],
        )
        .unwrap();
        assert!(evaluate_ck(&ck, Cx::new(2.0, 0.0)).norm() < 1e-14);
        assert!(!evaluate_ck(&ck, Cx::new(1.0, 0.0)).is_finite());
    }
}
