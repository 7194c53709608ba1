//! The four chain recipes: explicit cross-ratio constructions on a marked
//! tetrahedron whose values coincide with length- and angle-character
//! values on distinguished half-sum roots.
//!
//! Two recipes live on the length side and read off face half-sums from
//! plane sections of the quadric; two live on the angle side and read off
//! vertex stars from tangent-plane pencils along a ruling, landing on the
//! dual edge lines of the polar-dual tetrahedron. Every consecutive
//! equality of a chain is recorded as a [`ChainLink`] with both values and
//! their relative residual, and every incidence the construction asserts
//! (a projection landing on a vertex, a pencil plane cutting a dual edge at
//! a ruling crossing, the three-way concurrency in the face-star recipe) is
//! recorded as an [`IncidenceCheck`].

use num_complex::Complex64 as Cx;

use super::geometry::{
    chain_residual, finite_cr, pencil_cross_ratio, project_to_line, proj_distance,
    second_section_point, span_line_point, span_lines,
};
use crate::e8lattice::{face_root, star_root, LatticeVec};
use crate::error::{Error, Result};
use crate::projgeom::{
    cross_ratio_on_conic, cross_ratio_on_line, line_line_intersection, line_plane_intersection,
    plane_through_points, LineP3, PointP3,
};
use crate::tetra::{angle_function, length_function, MarkedTetra};
use crate::tol;

/// One verified equality inside a chain: two routes to the same value and
/// their relative residual.
#[derive(Clone, Debug)]
pub struct ChainLink {
    pub label: &'static str,
    pub lhs: Cx,
    pub rhs: Cx,
    pub residual: f64,
}

/// One incidence the chain construction asserts, as a scale-free residual
/// (projective distance of points, or a normalized plane evaluation).
#[derive(Clone, Debug)]
pub struct IncidenceCheck {
    pub label: &'static str,
    pub residual: f64,
}

/// Outcome of a single recipe: the target root, the geometric value `lhs`,
/// the character value `rhs`, their relative residual, and all recorded
/// intermediate checks.
#[derive(Clone, Debug)]
pub struct ChainReport {
    pub root: LatticeVec,
    pub lhs: Cx,
    pub rhs: Cx,
    pub residual: f64,
    pub links: Vec<ChainLink>,
    pub incidences: Vec<IncidenceCheck>,
}

impl ChainReport {
    /// Worst residual across the head comparison, every link, and every
    /// incidence check.
    pub fn worst(&self) -> f64 {
        let mut w = self.residual;
        for l in &self.links {
            w = w.max(l.residual);
        }
        for i in &self.incidences {
            w = w.max(i.residual);
        }
        w
    }

    /// Whether every recorded residual is at or below `tolerance`.
    pub fn holds(&self, tolerance: f64) -> bool {
        self.worst() <= tolerance
    }
}

#[derive(Default)]
struct Recorder {
    links: Vec<ChainLink>,
    incidences: Vec<IncidenceCheck>,
}

impl Recorder {
    fn link(&mut self, label: &'static str, lhs: Cx, rhs: Cx) {
        self.links.push(ChainLink { label, lhs, rhs, residual: chain_residual(lhs, rhs) });
    }

    fn incidence(&mut self, label: &'static str, residual: f64) {
        self.incidences.push(IncidenceCheck { label, residual });
    }

    fn finish(self, root: LatticeVec, lhs: Cx, rhs: Cx) -> ChainReport {
        ChainReport {
            root,
            lhs,
            rhs,
            residual: chain_residual(lhs, rhs),
            links: self.links,
            incidences: self.incidences,
        }
    }
}

fn aux(msg: impl Into<String>) -> Error {
    Error::AuxiliaryDegenerate(msg.into())
}

fn line_cr(pts: [&PointP3; 4], carrier: &LineP3) -> Result<Cx> {
    finite_cr(cross_ratio_on_line(pts, carrier, tol::CHAIN)?)
}

/// Length-side recipe for the face half-sum `(e₂₃ + e₂₄ + e₃₄ + e_∅)/2`.
///
/// Two auxiliary points are cut out of the section conic by plane `H₃`:
/// `U` by the plane through the far edge `(A₃A₄)` and `E₁₂`, and `V` by the
/// plane through `E₁₂`, `E₃₄`, `E₂₃`. The conic cross-ratio
/// `[E₂₁, V, U, E₄₂]` is then pushed down by central projection from `E₁₂`
/// onto the edge line `(A₂A₄)`, where it reads
/// `[A₂, (A₂A₄)∩(E₂₃E₃₄), A₄, E₄₂]` — the length-character value.
pub fn res_f1_face_recipe(t: &MarkedTetra) -> Result<ChainReport> {
    let root = face_root(2, 3, 4);
    let q = t.quadric();
    let verts = t.vertices();
    let section = &t.planes()[2];
    let e12 = t.edge_point(0, 1);
    let e21 = t.edge_point(1, 0);
    let e23 = t.edge_point(1, 2);
    let e34 = t.edge_point(2, 3);
    let e42 = t.edge_point(3, 1);

    let mut rec = Recorder::default();

    let aux_u = plane_through_points(&verts[2], &verts[3], e12)
        .map_err(|_| aux("the plane through the far edge and the transfer point degenerates"))?;
    let u = second_section_point(q, section, &aux_u, e12, "auxiliary section point U")?;
    let aux_v = plane_through_points(e12, e34, e23)
        .map_err(|_| aux("the plane through the three transfer points degenerates"))?;
    let v = second_section_point(q, section, &aux_v, e12, "auxiliary section point V")?;

    let conic = finite_cr(cross_ratio_on_conic([e21, &v, &u, e42], section, q, tol::CHAIN)?)?;

    let carrier = t.edge_line(1, 3)?;
    let transversal = LineP3::through(*e23, *e34)
        .map_err(|_| aux("the transversal through E23 and E34 degenerates"))?;
    let cross = line_line_intersection(&transversal, &carrier)
        .map_err(|_| aux("the transversal misses the target edge line"))?;

    let p_e21 = project_to_line(e12, e21, &carrier, "projection of E21")?;
    let p_v = project_to_line(e12, &v, &carrier, "projection of auxiliary point V")?;
    let p_u = project_to_line(e12, &u, &carrier, "projection of auxiliary point U")?;
    rec.incidence("projection of E21 lands on vertex A2", proj_distance(&p_e21, &verts[1]));
    rec.incidence("projection of V lands on the transversal crossing", proj_distance(&p_v, &cross));
    rec.incidence("projection of U lands on vertex A4", proj_distance(&p_u, &verts[3]));
    rec.incidence("E42 lies on the target edge line", carrier.parametrize(e42).1);

    let lhs = line_cr([&verts[1], &cross, &verts[3], e42], &carrier)?;
    let projected = line_cr([&p_e21, &p_v, &p_u, e42], &carrier)?;
    rec.link("conic section value vs displayed edge value", conic, lhs);
    rec.link("centrally projected value vs displayed edge value", projected, lhs);

    let rhs = length_function(t)?.eval(&root)?;
    Ok(rec.finish(root, lhs, rhs))
}

/// Length-side recipe for the face half-sum `(e₁₂ + e₁₃ + e₂₃ + e_∅)/2`.
///
/// One auxiliary point `W` is cut out of the section conic by plane `H₄`
/// using the plane through `(A₃A₄)` and `E₁₂`. The conic cross-ratio
/// `[W, E₃₁, E₂₁, E₂₃]` projects from `E₁₂` onto the edge line `(A₂A₃)`,
/// where it reads `[A₃, (E₁₂E₃₁)∩(A₂A₃), A₂, E₂₃]`.
pub fn res_f1_edge_recipe(t: &MarkedTetra) -> Result<ChainReport> {
    let root = face_root(1, 2, 3);
    let q = t.quadric();
    let verts = t.vertices();
    let section = &t.planes()[3];
    let e12 = t.edge_point(0, 1);
    let e21 = t.edge_point(1, 0);
    let e23 = t.edge_point(1, 2);
    let e31 = t.edge_point(2, 0);

    let mut rec = Recorder::default();

    let aux_w = plane_through_points(&verts[2], &verts[3], e12)
        .map_err(|_| aux("the plane through the far edge and the transfer point degenerates"))?;
    let w = second_section_point(q, section, &aux_w, e12, "auxiliary section point W")?;

    let conic = finite_cr(cross_ratio_on_conic([&w, e31, e21, e23], section, q, tol::CHAIN)?)?;

    let carrier = t.edge_line(1, 2)?;
    let ray = LineP3::through(*e12, *e31)
        .map_err(|_| aux("the ray through E12 and E31 degenerates"))?;
    let cross = line_line_intersection(&ray, &carrier)
        .map_err(|_| aux("the ray through E31 misses the target edge line"))?;

    let p_w = project_to_line(e12, &w, &carrier, "projection of auxiliary point W")?;
    let p_e21 = project_to_line(e12, e21, &carrier, "projection of E21")?;
    rec.incidence("projection of W lands on vertex A3", proj_distance(&p_w, &verts[2]));
    rec.incidence("projection of E21 lands on vertex A2", proj_distance(&p_e21, &verts[1]));
    rec.incidence("E23 lies on the target edge line", carrier.parametrize(e23).1);

    let lhs = line_cr([&verts[2], &cross, &verts[1], e23], &carrier)?;
    let projected = line_cr([&p_w, &cross, &p_e21, e23], &carrier)?;
    rec.link("conic section value vs displayed edge value", conic, lhs);
    rec.link("centrally projected value vs displayed edge value", projected, lhs);

    let rhs = length_function(t)?.eval(&root)?;
    Ok(rec.finish(root, lhs, rhs))
}

/// Angle-side recipe for the vertex star `(e₁₂ + e₁₃ + e₁₄ + e_{1234})/2`.
///
/// The chain starts from the conic cross-ratio
/// `[R_{E₁₂}∩H₂, E₃₁, L_{E₁₂}∩H₂, E₄₁]` on the section by `H₂`, transfers
/// it along left rulings onto the right ruling `R_{E₁₂}`, rewrites it as a
/// tangent-plane pencil through that ruling, rebuilds the same pencil from
/// ruling crossings, and finally cuts the pencil with the dual edge line
/// `(H₂∨H₄∨)`, where it reads `[H₂∨, E'₃₁, H₄∨, (E'₄₁E'₂₁)∩(H₂∨H₄∨)]` —
/// the angle-character value.
pub fn res_f2_vertex_recipe(t: &MarkedTetra) -> Result<ChainReport> {
    let root = star_root(1);
    let q = t.quadric();
    let section = &t.planes()[1];
    let e12 = t.edge_point(0, 1);
    let e31 = t.edge_point(2, 0);
    let e41 = t.edge_point(3, 0);

    let mut rec = Recorder::default();

    let l12 = t.left_generator(e12)?;
    let r12 = t.right_generator(e12)?;
    let p_l = line_plane_intersection(&l12, section)
        .map_err(|_| aux("the left ruling through E12 misses the section plane"))?;
    let p_r = line_plane_intersection(&r12, section)
        .map_err(|_| aux("the right ruling through E12 misses the section plane"))?;

    let conic = finite_cr(cross_ratio_on_conic([&p_r, e31, &p_l, e41], section, q, tol::CHAIN)?)?;

    // transfer along left rulings onto the right ruling R_{E12}
    let onto_r = |x: &PointP3, what: &'static str| -> Result<PointP3> {
        let l = t.left_generator(x).map_err(|e| aux(format!("{what}: {e}")))?;
        line_line_intersection(&l, &r12).map_err(|e| aux(format!("{what}: {e}")))
    };
    let t1 = onto_r(&p_r, "transfer of the right section point")?;
    let t2 = onto_r(e31, "transfer of E31")?;
    let t3 = onto_r(&p_l, "transfer of the left section point")?;
    let t4 = onto_r(e41, "transfer of E41")?;
    rec.incidence("the right section point transfers to itself", proj_distance(&t1, &p_r));
    rec.incidence("the left section point transfers to E12", proj_distance(&t3, e12));
    let ruled = line_cr([&t1, &t2, &t3, &t4], &r12)?;
    rec.link("conic section value vs ruling transfer value", conic, ruled);

    // tangent-plane pencil through R_{E12}
    let h2v = q.pole(section);
    let h4v = q.pole(&t.planes()[3]);
    let pl1 = span_line_point(&r12, &h2v, "pencil plane through the section pole")?;
    let pl2 = span_lines(&r12, &t.left_generator(e31)?, "pencil plane through the ruling of E31")?;
    let pl3 = span_lines(&r12, &l12, "tangent pencil plane at E12")?;
    let pl4 = span_lines(&r12, &t.left_generator(e41)?, "pencil plane through the ruling of E41")?;
    let pencil = pencil_cross_ratio([&pl1, &pl2, &pl3, &pl4], tol::CHAIN)?;
    rec.link("ruling transfer value vs tangent pencil value", ruled, pencil);

    // the same pencil rebuilt from ruling crossings
    let te21 = t.ruling_crossing(1, 0)?;
    let te31 = t.ruling_crossing(2, 0)?;
    let te12 = t.ruling_crossing(0, 1)?;
    let te41 = t.ruling_crossing(3, 0)?;
    let r_cross = t.right_generator(&te21)?;
    let ql1 = span_line_point(&r_cross, &h2v, "crossing pencil plane through the section pole")?;
    let ql2 = span_lines(&r_cross, &t.left_generator(&te31)?, "crossing pencil plane of E'31")?;
    let ql3 = span_lines(&r_cross, &t.left_generator(&te12)?, "crossing pencil plane of E'12")?;
    let ql4 = span_lines(&r_cross, &t.left_generator(&te41)?, "crossing pencil plane of E'41")?;
    let pencil2 = pencil_cross_ratio([&ql1, &ql2, &ql3, &ql4], tol::CHAIN)?;
    rec.link("tangent pencil value vs crossing pencil value", pencil, pencil2);

    // cut the pencil with the dual edge line (H2∨ H4∨)
    let carrier = LineP3::through(h2v, h4v)
        .map_err(|_| aux("the dual edge line through H2∨ and H4∨ degenerates"))?;
    let chord = LineP3::through(te41, te21)
        .map_err(|_| aux("the chord through E'41 and E'21 degenerates"))?;
    let y = line_line_intersection(&chord, &carrier)
        .map_err(|_| aux("the crossing chord misses the dual edge line"))?;
    let lhs = line_cr([&h2v, &te31, &h4v, &y], &carrier)?;
    rec.link("crossing pencil value vs displayed dual-edge value", pencil2, lhs);

    for (label, plane, target) in [
        ("section-pole pencil plane cuts the dual edge at H2∨", &ql1, &h2v),
        ("E'31 pencil plane cuts the dual edge at E'31", &ql2, &te31),
        ("E'12 pencil plane cuts the dual edge at H4∨", &ql3, &h4v),
        ("E'41 pencil plane cuts the dual edge at the chord crossing", &ql4, &y),
    ] {
        let cut = line_plane_intersection(&carrier, plane)
            .map_err(|_| aux("a pencil plane contains the dual edge line"))?;
        rec.incidence(label, proj_distance(&cut, target));
    }

    // independent route: product of the three dual-edge cross-ratios
    let h3v = q.pole(&t.planes()[2]);
    let te14 = t.ruling_crossing(0, 3)?;
    let te13 = t.ruling_crossing(0, 2)?;
    let d34 = LineP3::through(h4v, h3v).map_err(|_| aux("dual edge (H4∨H3∨) degenerates"))?;
    let d23 = LineP3::through(h3v, h2v).map_err(|_| aux("dual edge (H3∨H2∨) degenerates"))?;
    let d24 = LineP3::through(h4v, h2v).map_err(|_| aux("dual edge (H4∨H2∨) degenerates"))?;
    let c1 = line_cr([&h4v, &te21, &h3v, &te12], &d34)?;
    let c2 = line_cr([&h3v, &te41, &h2v, &te14], &d23)?;
    let c3 = line_cr([&h4v, &te13, &h2v, &te31], &d24)?;
    rec.link("dual-edge cross-ratio product vs displayed dual-edge value", c1 * c2 * c3, lhs);

    let rhs = angle_function(t)?.eval(&root)?;
    Ok(rec.finish(root, lhs, rhs))
}

/// Angle-side recipe for the vertex star `(e₁₄ + e₂₄ + e₃₄ + e_{1234})/2`.
///
/// An auxiliary point `U` is cut out of the section by `H₁` with the plane
/// `(E₁₂E₃₄E₄₁)`, anchored at `E₃₄`. The conic cross-ratio
/// `[L_{E₁₂}∩H₁, U, R_{E₁₂}∩H₁, E₄₂]` transfers onto the ruling `R_{E₁₂}`,
/// becomes a tangent-plane pencil, is rebuilt from ruling crossings, and is
/// cut with the dual edge line `(H₁∨H₃∨)`, where it reads
/// `[H₃∨, W, H₁∨, E'₄₂]`. The point `W` is the concurrency point of three
/// independently constructed loci — the chord `(E'₄₁E'₄₃)`, the dual edge
/// line itself, and the plane spanned by `U` and `R_{E₁₂}` — and the recipe
/// fails with [`Error::ConcurrencyFailure`] if their pairwise intersections
/// scatter.
pub fn res_f2_face_recipe(t: &MarkedTetra) -> Result<ChainReport> {
    let root = star_root(4);
    let q = t.quadric();
    let section = &t.planes()[0];
    let e12 = t.edge_point(0, 1);
    let e34 = t.edge_point(2, 3);
    let e41 = t.edge_point(3, 0);
    let e42 = t.edge_point(3, 1);

    let mut rec = Recorder::default();

    let l12 = t.left_generator(e12)?;
    let r12 = t.right_generator(e12)?;

    let aux_u = plane_through_points(e12, e34, e41)
        .map_err(|_| aux("the plane through E12, E34, E41 degenerates"))?;
    let u = second_section_point(q, section, &aux_u, e34, "auxiliary section point U")?;

    let p_l = line_plane_intersection(&l12, section)
        .map_err(|_| aux("the left ruling through E12 misses the section plane"))?;
    let p_r = line_plane_intersection(&r12, section)
        .map_err(|_| aux("the right ruling through E12 misses the section plane"))?;

    let conic = finite_cr(cross_ratio_on_conic([&p_l, &u, &p_r, e42], section, q, tol::CHAIN)?)?;

    // transfer along left rulings onto the right ruling R_{E12}
    let onto_r = |x: &PointP3, what: &'static str| -> Result<PointP3> {
        let l = t.left_generator(x).map_err(|e| aux(format!("{what}: {e}")))?;
        line_line_intersection(&l, &r12).map_err(|e| aux(format!("{what}: {e}")))
    };
    let s1 = onto_r(&p_l, "transfer of the left section point")?;
    let s2 = onto_r(&u, "transfer of auxiliary point U")?;
    let s3 = onto_r(&p_r, "transfer of the right section point")?;
    let s4 = onto_r(e42, "transfer of E42")?;
    rec.incidence("the left section point transfers to E12", proj_distance(&s1, e12));
    rec.incidence("the right section point transfers to itself", proj_distance(&s3, &p_r));
    let ruled = line_cr([&s1, &s2, &s3, &s4], &r12)?;
    rec.link("conic section value vs ruling transfer value", conic, ruled);

    // tangent-plane pencil through R_{E12}
    let h1v = q.pole(section);
    let l_u = t.left_generator(&u)?;
    let pl1 = span_lines(&r12, &l12, "tangent pencil plane at E12")?;
    let pl2 = span_lines(&r12, &l_u, "pencil plane through the ruling of U")?;
    let pl3 = span_line_point(&r12, &h1v, "pencil plane through the section pole")?;
    let pl4 = span_lines(&r12, &t.left_generator(e42)?, "pencil plane through the ruling of E42")?;
    let pencil = pencil_cross_ratio([&pl1, &pl2, &pl3, &pl4], tol::CHAIN)?;
    rec.link("ruling transfer value vs tangent pencil value", ruled, pencil);

    // the same pencil rebuilt from ruling crossings
    let te21 = t.ruling_crossing(1, 0)?;
    let te12 = t.ruling_crossing(0, 1)?;
    let te42 = t.ruling_crossing(3, 1)?;
    let r_cross = t.right_generator(&te21)?;
    let ql1 = span_lines(&r_cross, &t.left_generator(&te12)?, "crossing pencil plane of E'12")?;
    let ql2 = span_lines(&r_cross, &l_u, "crossing pencil plane through the ruling of U")?;
    let ql3 = span_line_point(&r_cross, &h1v, "crossing pencil plane through the section pole")?;
    let ql4 = span_lines(&r_cross, &t.left_generator(&te42)?, "crossing pencil plane of E'42")?;
    let pencil2 = pencil_cross_ratio([&ql1, &ql2, &ql3, &ql4], tol::CHAIN)?;
    rec.link("tangent pencil value vs crossing pencil value", pencil, pencil2);

    // cut the pencil with the dual edge line (H1∨ H3∨); the second pencil
    // plane meets it at the concurrency point W, checked three ways
    let h3v = q.pole(&t.planes()[2]);
    let carrier = LineP3::through(h1v, h3v)
        .map_err(|_| aux("the dual edge line through H1∨ and H3∨ degenerates"))?;
    let te41 = t.ruling_crossing(3, 0)?;
    let te43 = t.ruling_crossing(3, 2)?;
    let chord = LineP3::through(te41, te43)
        .map_err(|_| aux("the chord through E'41 and E'43 degenerates"))?;
    let w_a = line_plane_intersection(&carrier, &pl2)
        .map_err(|_| Error::ConcurrencyFailure { scatter: f64::INFINITY })?;
    let w_b = line_line_intersection(&chord, &carrier)
        .map_err(|_| Error::ConcurrencyFailure { scatter: f64::INFINITY })?;
    let w_c = line_plane_intersection(&chord, &pl2)
        .map_err(|_| Error::ConcurrencyFailure { scatter: f64::INFINITY })?;
    let scatter = proj_distance(&w_a, &w_b)
        .max(proj_distance(&w_a, &w_c))
        .max(proj_distance(&w_b, &w_c));
    if scatter > tol::CHAIN {
        return Err(Error::ConcurrencyFailure { scatter });
    }
    rec.incidence("three loci through W are concurrent (pairwise scatter)", scatter);

    let lhs = line_cr([&h3v, &w_a, &h1v, &te42], &carrier)?;
    rec.link("crossing pencil value vs displayed dual-edge value", pencil2, lhs);

    for (label, plane, target) in [
        ("tangent plane at E'12 cuts the dual edge at H3∨", &ql1, &h3v),
        ("section-pole pencil plane cuts the dual edge at H1∨", &ql3, &h1v),
        ("E'42 pencil plane cuts the dual edge at E'42", &ql4, &te42),
    ] {
        let cut = line_plane_intersection(&carrier, plane)
            .map_err(|_| aux("a pencil plane contains the dual edge line"))?;
        rec.incidence(label, proj_distance(&cut, target));
    }

    // auxiliary incidences behind the concurrency: the polar plane of
    // V = (E12E41) ∩ (UE34) carries H1∨, H3∨, and the two ruling meeting
    // points W1 = R_{E12}∩L_{E41} and W2 = L_U∩R_{E34}, whose chord
    // recovers W on the dual edge line
    let h2v = q.pole(&t.planes()[1]);
    let ray1 = LineP3::through(*e12, *e41)
        .map_err(|_| aux("the ray through E12 and E41 degenerates"))?;
    let ray2 = LineP3::through(u, *e34)
        .map_err(|_| aux("the ray through U and E34 degenerates"))?;
    let v_pt = line_line_intersection(&ray1, &ray2)
        .map_err(|_| aux("auxiliary point V is not defined"))?;
    let v_polar = q.polar_plane(&v_pt);
    rec.incidence("the polar plane of V passes through H1∨", v_polar.residual(&h1v));
    rec.incidence("the polar plane of V passes through H3∨", v_polar.residual(&h3v));
    let w1 = line_line_intersection(&r12, &t.left_generator(e41)?)
        .map_err(|_| aux("auxiliary point W1 is not defined"))?;
    let w2 = line_line_intersection(&l_u, &t.right_generator(e34)?)
        .map_err(|_| aux("auxiliary point W2 is not defined"))?;
    rec.incidence("W1 lies on the polar plane of V", v_polar.residual(&w1));
    rec.incidence("W2 lies on the polar plane of V", v_polar.residual(&w2));
    let w_chord = LineP3::through(w1, w2)
        .map_err(|_| aux("the chord through W1 and W2 degenerates"))?;
    let w_d = line_line_intersection(&w_chord, &carrier)
        .map_err(|_| aux("the chord through W1 and W2 misses the dual edge line"))?;
    rec.incidence("the chord (W1 W2) recovers the concurrency point", proj_distance(&w_d, &w_a));

    // independent route: product of the three dual-edge cross-ratios
    let te14 = t.ruling_crossing(0, 3)?;
    let te34 = t.ruling_crossing(2, 3)?;
    let te24 = t.ruling_crossing(1, 3)?;
    let d23 = LineP3::through(h3v, h2v).map_err(|_| aux("dual edge (H3∨H2∨) degenerates"))?;
    let d12 = LineP3::through(h2v, h1v).map_err(|_| aux("dual edge (H2∨H1∨) degenerates"))?;
    let c1 = line_cr([&h3v, &te41, &h2v, &te14], &d23)?;
    let c2 = line_cr([&h2v, &te43, &h1v, &te34], &d12)?;
    let c3 = line_cr([&h3v, &te24, &h1v, &te42], &carrier)?;
    rec.link("dual-edge cross-ratio product vs displayed dual-edge value", c1 * c2 * c3, lhs);

    let rhs = angle_function(t)?.eval(&root)?;
    Ok(rec.finish(root, lhs, rhs))
}
