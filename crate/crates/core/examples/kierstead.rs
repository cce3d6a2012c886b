//! Kierstead paths of length four from the uncoloured edge.

use fanforge::fan::{kierstead_paths4, verify_kp_elementary, EdgeInstance};
use fanforge::graph::{delete_vertex, petersen};
use fanforge::solver::sample_colorings;
use std::sync::Arc;

fn main() {
    let g = Arc::new(delete_vertex(&petersen(), 0).unwrap());
    let k = g.max_degree() as u8;
    let mut shown = 0;
    for e in 0..g.edge_count() {
        let (v0, _) = g.edge(e);
        // every edge of Petersen − v is critical
        let inst = EdgeInstance::from_known(g.clone(), e, v0, true, true).unwrap();
        for phi in sample_colorings(&g, Some(e), k, 3, 0, 1_000_000).unwrap().colorings {
            for kp in kierstead_paths4(&phi, v0).unwrap() {
                let v = verify_kp_elementary(&inst, &phi, &kp);
                if shown < 6 {
                    println!("{:?} colours {:?}: {:?}", kp.vertices, kp.edge_colors, v.status);
                    shown += 1;
                }
            }
        }
    }
}
