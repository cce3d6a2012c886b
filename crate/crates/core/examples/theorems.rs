//! The implication checks on a few Δ-critical graphs.

use fanforge::graph::{cycle, delete_vertex, from_graph6, petersen, SimpleGraph};
use fanforge::solver::SolverConfig;
use fanforge::theorems::{check_conjecture, check_theorem, check_val, ConjectureName, GraphFacts, TheoremName};
use std::sync::Arc;

fn main() {
    let cfg = SolverConfig::default();
    let graphs: Vec<(&str, SimpleGraph)> = vec![
        ("C7", cycle(7).unwrap()),
        ("Petersen − v", delete_vertex(&petersen(), 0).unwrap()),
        // Δ-critical on 7 vertices with Δ = 5 and a thin Δ-core
        ("FFz~o", from_graph6("FFz~o").unwrap()),
    ];
    for (name, g) in graphs {
        let g = Arc::new(g);
        let f = GraphFacts::compute(&g, &cfg).unwrap();
        println!("{name}: Δ={} χ′={} Δ-critical {}", f.delta, f.chi_prime, f.delta_critical);
        let v = check_val(&g, &f);
        println!("  val: {:?} ({} checked)", v.status, v.checked);
        for t in TheoremName::ALL {
            let v = check_theorem(t, &g, &f);
            println!("  {t}: {:?} ({} checked) {}", v.status, v.checked, v.reason.unwrap_or_default());
        }
        for c in ConjectureName::ALL {
            let v = check_conjecture(c, &g, &f, &cfg);
            println!("  {c:?}: {:?} {}", v.status, v.reason.unwrap_or_default());
        }
    }
}
