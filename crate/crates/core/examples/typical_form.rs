//! Relabelling a fan into typical form and reading off which colour of
//! φ̄(s1) induces each fan colour.

use fanforge::fan::{inducing_map, normalize_typical, search_maximum_multifan, SearchMode};
use fanforge::graph::{delete_vertex, petersen};
use std::sync::Arc;

fn main() {
    let g = Arc::new(delete_vertex(&petersen(), 0).unwrap());
    let s1 = (0..g.n()).find(|&v| g.degree(v) == 2).unwrap();
    let r = g.neighbors(s1)[0];
    let e = g.edge_between(r, s1).unwrap();
    let best = search_maximum_multifan(&g, e, r, None, SearchMode::Exhaustive, 100_000).unwrap();
    println!("fan {:?} in {}", best.fan.vertices(), best.coloring.to_line());

    let (phi, fan, map) = normalize_typical(&best.coloring, &best.fan).unwrap();
    println!("relabel {:?}", map.moved());
    println!("typical {}", phi.to_line());
    let t = fan.typical.as_ref().unwrap();
    println!("α = {}, β = {}, 2-inducing {:?}, Δ-inducing {:?}", t.alpha, t.beta, t.two_inducing, t.delta_inducing);
    for (v, m) in fan.vertices().iter().zip(std::iter::once(fan.center_missing).chain(fan.missing.iter().copied())) {
        println!("  φ̄({v}) = {m:?}");
    }
    for entry in inducing_map(&phi, &fan).unwrap().entries {
        println!("  colour {} at {} is induced by {} along {:?}", entry.color, entry.vertex, entry.inducer, entry.sequence);
    }
}
