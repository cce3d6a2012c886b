//! Every per-edge lemma check over the critical edges of one graph.

use fanforge::graph::{delete_vertex, petersen};
use fanforge::solver::SolverConfig;
use fanforge::theorems::{run_lemma_suite, GraphFacts, SuiteConfig};
use std::sync::Arc;

fn main() {
    let g = Arc::new(delete_vertex(&petersen(), 0).unwrap());
    let facts = GraphFacts::compute(&g, &SolverConfig::default()).unwrap();
    let rep = run_lemma_suite(&g, &facts, &SuiteConfig::default());
    println!(
        "{} critical edges, {} instances, {} colourings ({} edges exhaustive)",
        rep.critical_edges, rep.instances, rep.colorings, rep.exhaustive_edges
    );
    for (name, t) in &rep.lemmas {
        println!(
            "{name:>22}: {:?}  pass {} inapplicable {} conditional {} fail {}  checked {}",
            t.status(),
            t.pass,
            t.inapplicable,
            t.conditional,
            t.fail,
            t.checked
        );
    }
}
