//! Exact chromatic index, class and criticality of a few small graphs.

use fanforge::graph::{complete, cycle, delete_vertex, petersen, SimpleGraph};
use fanforge::solver::{chromatic_index, criticality, is_overfull, overfull_deficiency, SolverConfig};
use std::sync::Arc;

fn main() {
    let cfg = SolverConfig::default();
    let graphs: Vec<(&str, SimpleGraph)> = vec![
        ("C4", cycle(4).unwrap()),
        ("C5", cycle(5).unwrap()),
        ("K5", complete(5)),
        ("Petersen", petersen()),
        ("Petersen − v", delete_vertex(&petersen(), 0).unwrap()),
    ];
    for (name, g) in graphs {
        let g = Arc::new(g);
        let v = chromatic_index(&g, &cfg).unwrap();
        let crit = criticality(&g, &cfg, false).unwrap();
        let deficiency = overfull_deficiency(&g).map(|d| d.to_string()).unwrap_or_else(|_| "-".into());
        println!(
            "{name:>13}: Δ={} χ′={} class {:?}, overfull {} (deficiency {deficiency}), Δ-critical {}, {} search nodes",
            g.max_degree(),
            v.chi_prime,
            v.class,
            is_overfull(&g),
            crit.delta_critical,
            v.nodes
        );
        println!("               witness {}", v.witness.to_line());
    }
}
