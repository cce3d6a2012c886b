//! Greedy multifans, the maximum multifan over all colourings of G − e, and
//! how recolouring affects a fan.

use fanforge::fan::{grow_multifan, search_maximum_multifan, stability_class, SearchMode};
use fanforge::graph::{delete_vertex, petersen};
use fanforge::solver::sample_colorings;
use std::sync::Arc;

fn main() {
    let g = Arc::new(delete_vertex(&petersen(), 0).unwrap());
    // a Δ-vertex next to a 2-vertex
    let s1 = (0..g.n()).find(|&v| g.degree(v) == 2).unwrap();
    let r = g.neighbors(s1)[0];
    let e = g.edge_between(r, s1).unwrap();
    let k = g.max_degree() as u8;

    let sample = sample_colorings(&g, Some(e), k, 5, 1, 1_000_000).unwrap();
    for phi in &sample.colorings {
        let fan = grow_multifan(phi, r).unwrap();
        println!("greedy fan {:?} missing {:?} in {}", fan.vertices(), fan.missing_union(), phi.to_line());
    }

    for mode in [SearchMode::Exhaustive, SearchMode::Reachability] {
        let best = search_maximum_multifan(&g, e, r, Some(&sample.colorings[0]), mode, 10_000).unwrap();
        println!(
            "{mode:?}: |V(F)| = {} ({:?}, bound {}) after {} colourings",
            best.fan.size(),
            best.status,
            best.upper_bound,
            best.examined
        );
    }

    let phi = &sample.colorings[0];
    let fan = grow_multifan(phi, r).unwrap();
    for (a, b) in [(1, 2), (1, 3), (2, 3)] {
        for x in 0..g.n() {
            if let Ok(next) = phi.swap_at(x, a, b) {
                let st = stability_class(&next, phi, &fan).unwrap();
                if x < 3 {
                    println!("swap ({a},{b}) at {x}: {st:?}");
                }
            }
        }
    }
}
