use tetrig::correspond::*;
use tetrig::tetra::{Geometry, MetricSpec, MarkedTetra};

fn main() {
    let spec = MetricSpec::new(Geometry::Hyperbolic, [1.0, 1.2, 1.4, 1.1, 1.3, 1.5]);
    let t = MarkedTetra::from_metric(&spec).unwrap();
    for (name, rep) in [
        ("f1_face", res_f1_face_recipe(&t)),
        ("f1_edge", res_f1_edge_recipe(&t)),
        ("f2_vertex", res_f2_vertex_recipe(&t)),
        ("f2_face", res_f2_face_recipe(&t)),
    ] {
        match rep {
            Ok(r) => {
                println!("== {name}: head lhs={:.6} rhs={:.6} res={:.3e}", r.lhs, r.rhs, r.residual);
                for l in &r.links {
                    println!("   link {:<55} lhs={:.6} rhs={:.6} res={:.3e}", l.label, l.lhs, l.rhs, l.residual);
                }
                for i in &r.incidences {
                    println!("   inc  {:<55} res={:.3e}", i.label, i.residual);
                }
            }
            Err(e) => println!("== {name}: ERROR {e}"),
        }
    }
}
