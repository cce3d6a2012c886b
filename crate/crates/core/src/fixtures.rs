//! Small named instances shared by examples and tests.

use crate::coloring::PartialEdgeColoring;
use crate::graph::{cycle, Vertex};
use std::sync::Arc;

/// Vertex names of the C5 instance, in cycle order.
#[derive(Clone, Copy, Debug)]
pub struct C5Labels {
    pub r: Vertex,
    pub s1: Vertex,
    pub a: Vertex,
    pub b: Vertex,
    pub c: Vertex,
}

/// C5 on `r, s1, a, b, c` (ids 0..5) with `rs1` uncoloured and the path
/// `s1 a b c r` coloured `1, 2, 1, 2` from the palette `[1, 2]`.
pub fn c5_fixture() -> (PartialEdgeColoring, C5Labels) {
    let g = Arc::new(cycle(5).expect("n >= 3"));
    let labels = C5Labels { r: 0, s1: 1, a: 2, b: 3, c: 4 };
    let mut colors = vec![0u8; 5];
    for (u, v, c) in [(1, 2, 1), (2, 3, 2), (3, 4, 1), (4, 0, 2)] {
        colors[g.edge_between(u, v).unwrap()] = c;
    }
    let phi = PartialEdgeColoring::from_slice(g, 2, &colors).expect("fixture is well formed");
    (phi, labels)
}
