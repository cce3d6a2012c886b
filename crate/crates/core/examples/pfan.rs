//! Growing a P-fan from a maximum multifan and checking what it promises.

use fanforge::fan::{search_maximum_multifan, EdgeInstance, SearchMode};
use fanforge::graph::{delete_vertex, petersen};
use fanforge::theorems::{grow_pfan, verify_pfan_adjacency, verify_pfan_properties};
use std::sync::Arc;

fn main() {
    let g = Arc::new(delete_vertex(&petersen(), 0).unwrap());
    for e in 0..g.edge_count() {
        let (a, b) = g.edge(e);
        for r in [a, b] {
            let inst = EdgeInstance::from_known(g.clone(), e, r, true, true).unwrap();
            if inst.standard_gate().is_some() || g.degree(r) != inst.delta {
                continue;
            }
            let best = search_maximum_multifan(&g, e, r, None, SearchMode::Exhaustive, 100_000).unwrap();
            let s = grow_pfan(&best.coloring, &best.fan, best.status, 500);
            println!(
                "r={r} s1={}: S = {:?} ({:?} over {} F-stable colourings, {} rejected)",
                inst.s1,
                s.vertices(),
                s.p2_status,
                s.explored,
                s.rejected.len()
            );
            println!(
                "  properties {:?}, adjacency {:?}",
                verify_pfan_properties(&inst, &best.coloring, &s).status,
                verify_pfan_adjacency(&inst, &s).status
            );
        }
    }
}
