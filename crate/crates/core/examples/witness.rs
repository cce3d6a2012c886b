//! Recolouring witnesses for the τ items, with their transcripts replayed.
//! Fans here are greedy, so they need not be maximum.

use fanforge::fan::{grow_multifan, normalize_typical};
use fanforge::graph::from_graph6;
use fanforge::recolor::{is_avoiding, witness_tau_item, TauItem, WitnessStatus};
use fanforge::solver::sample_colorings;
use std::sync::Arc;

fn main() {
    let mut shown = 0;
    let graphs = include_str!("../tests/fixtures/connected_le7.g6").lines().map(|l| Arc::new(from_graph6(l).unwrap()));
    'search: for g in graphs.filter(|g| g.max_degree() >= 4) {
        let k = g.max_degree() as u8;
        for e in 0..g.edge_count() {
            let Ok(sample) = sample_colorings(&g, Some(e), k, 2, 1, 100_000) else { continue };
            let (a, b) = g.edge(e);
            for phi in &sample.colorings {
                for r in [a, b] {
                    let Ok((p, f, _)) = normalize_typical(phi, &grow_multifan(phi, r).unwrap()) else {
                        continue;
                    };
                    let off = p.palette().difference(p.missing_union(&f.vertices()));
                    for tau in off.iter() {
                        for x in (0..g.n()).filter(|&x| x != r && !g.has_edge(r, x)) {
                            for item in TauItem::ALL {
                                let Ok(w) = witness_tau_item(item, &p, &f, x, tau, 2000) else { continue };
                                if w.status != WitnessStatus::Witness {
                                    continue;
                                }
                                let end = w.coloring.as_ref().unwrap();
                                assert_eq!(w.transcript.replay(&p).unwrap().to_line(), end.to_line());
                                println!("{} with r={r}, fan {:?}", p.to_line(), f.vertices());
                                println!(
                                    "  item ({item}) at x={x}, τ={tau}: {:?} by {:?} in {} steps, avoids {:?}: {}",
                                    w.stability,
                                    w.method,
                                    w.transcript.len(),
                                    w.avoided,
                                    is_avoiding(&w.transcript, w.avoided)
                                );
                                shown += 1;
                                if shown == 4 {
                                    break 'search;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
