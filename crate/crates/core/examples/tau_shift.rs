//! τ-sequences off a fan and the shift along one.

use fanforge::fan::{grow_multifan, stability_class};
use fanforge::graph::from_graph6;
use fanforge::recolor::{build_tau_sequence, shift_tau, Derivation};
use fanforge::solver::sample_colorings;
use std::sync::Arc;

fn main() {
    // K5 minus a matching edge and a pendant: Δ = 4 with room off the fan
    let g = Arc::new(from_graph6("DE{").unwrap());
    let e = g.edge_between(0, 4).unwrap();
    let k = g.max_degree() as u8;
    let phi = sample_colorings(&g, Some(e), k, 1, 0, 1_000_000).unwrap().colorings.remove(0);
    let fan = grow_multifan(&phi, 0).unwrap();
    let used = phi.missing_union(&fan.vertices());
    println!("{} with fan {:?} missing {:?}", phi.to_line(), fan.vertices(), used);

    for tau in phi.palette().difference(used).iter() {
        match build_tau_sequence(&phi, &fan, tau) {
            Ok(seq) => {
                println!("τ = {tau}: {:?} missing {:?}, type {}", seq.vertices, seq.missing, seq.kind_name());
                if seq.shift_eligible(&phi) {
                    let next = shift_tau(&phi, &seq).unwrap();
                    println!("  shifted: {} ({:?})", next.to_line(), stability_class(&next, &phi, &fan).unwrap());
                    // the same step through a derivation, which keeps a transcript
                    let mut d = Derivation::new(&phi);
                    d.shift(fan.center, &seq.vertices).unwrap();
                    println!("  transcript {}", serde_json::to_string(&d.transcript).unwrap());
                }
            }
            Err(err) => println!("τ = {tau}: {err}"),
        }
    }
}
