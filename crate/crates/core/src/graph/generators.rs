use super::{EdgeId, GraphError, SimpleGraph, Vertex};

pub fn cycle(n: usize) -> Result<SimpleGraph, GraphError> {
    if n < 3 {
        return Err(GraphError::CycleTooShort(n));
    }
    SimpleGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> SimpleGraph {
    SimpleGraph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are simple")
}

pub fn complete(n: usize) -> SimpleGraph {
    let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
    SimpleGraph::from_edges(n, pairs).expect("complete graph edges are simple")
}

/// `K_{1,k}` with centre 0.
pub fn star(k: usize) -> SimpleGraph {
    SimpleGraph::from_edges(k + 1, (1..=k).map(|i| (0, i))).expect("star edges are simple")
}

/// Outer 5-cycle on 0..5, spokes `i - i+5`, inner pentagram on 5..10.
pub fn petersen() -> SimpleGraph {
    let mut pairs = Vec::with_capacity(15);
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((i, i + 5));
        pairs.push((5 + i, 5 + (i + 2) % 5));
    }
    SimpleGraph::from_edges(10, pairs).expect("petersen edges are simple")
}

/// Removes `v`. The last vertex `n-1` takes over the id `v`; all other ids
/// are unchanged. Edge ids are re-derived from the sorted edge list.
pub fn delete_vertex(g: &SimpleGraph, v: Vertex) -> Result<SimpleGraph, GraphError> {
    g.check_vertex(v)?;
    let last = g.n() - 1;
    let relabel = |w: Vertex| if w == last { v } else { w };
    let pairs = g
        .edges()
        .iter()
        .filter(|&&(a, b)| a != v && b != v)
        .map(|&(a, b)| (relabel(a), relabel(b)));
    SimpleGraph::from_edges(last, pairs)
}

/// Removes edge `e`; vertices keep their ids, edges after `e` move down by one.
pub fn delete_edge(g: &SimpleGraph, e: EdgeId) -> Result<SimpleGraph, GraphError> {
    g.check_edge(e)?;
    let pairs = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(id, _)| id != e)
        .map(|(_, &p)| p);
    SimpleGraph::from_edges(g.n(), pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let c5 = cycle(5).unwrap();
        assert_eq!((c5.n(), c5.edge_count(), c5.max_degree()), (5, 5, 2));
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert_eq!(complete(5).edge_count(), 10);
        assert!(cycle(2).is_err());
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn petersen_minus_vertex() {
        let g = delete_vertex(&petersen(), 0).unwrap();
        assert_eq!((g.n(), g.edge_count()), (9, 12));
        let p = g.degree_profile();
        assert_eq!(p.delta, 3);
        assert_eq!(p.delta_vertices.len(), 6);
        // each remaining degree-3 vertex sees exactly two others of degree 3
        assert_eq!((p.core_min_degree, p.core_max_degree), (2, 2));
        assert_eq!(g.light_vertices().len(), 9);
        assert!(delete_vertex(&g, 9).is_err());
    }

    #[test]
    fn delete_vertex_relabels_last() {
        let g = path(4); // 0-1-2-3
        let h = delete_vertex(&g, 1).unwrap(); // 3 becomes 1
        assert_eq!(h.edges(), &[(1, 2)]);
    }

    #[test]
    fn deleting_cycle_edge_gives_path() {
        for n in 3..9 {
            let c = cycle(n).unwrap();
            for e in 0..n {
                let p = delete_edge(&c, e).unwrap();
                let ones = (0..n).filter(|&v| p.degree(v) == 1).count();
                assert_eq!(ones, 2);
                assert!(p.is_connected());
            }
        }
        assert!(delete_edge(&cycle(3).unwrap(), 3).is_err());
    }
}
