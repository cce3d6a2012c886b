//! Kempe chains and swaps on a colouring of the Petersen graph.

use fanforge::graph::petersen;
use fanforge::solver::{chromatic_index, SolverConfig};
use std::sync::Arc;

fn main() {
    let g = Arc::new(petersen());
    let phi = chromatic_index(&g, &SolverConfig::default()).unwrap().witness;
    println!("start   {}", phi.to_line());
    for (a, b) in [(1, 2), (1, 4), (3, 4)] {
        let chain = phi.chain_at(0, a, b).unwrap();
        println!("C_0({a},{b}) is a {:?} through {:?}", chain.kind, chain.vertices);
    }
    let swapped = phi.swap_at(0, 1, 4).unwrap();
    println!("swapped {}", swapped.to_line());
    for v in 0..g.n() {
        if phi.missing(v) != swapped.missing(v) {
            println!("  vertex {v} missed {:?}, now misses {:?}", phi.missing(v), swapped.missing(v));
        }
    }
    assert!(swapped.validate());
    assert_eq!(swapped.swap_at(0, 1, 4).unwrap().assignment(), phi.assignment());
}
