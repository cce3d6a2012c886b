use super::*;
use crate::fixtures::c5_fixture;
use crate::graph::{cycle, path, SimpleGraph};

fn arc(g: SimpleGraph) -> Arc<SimpleGraph> {
    Arc::new(g)
}

#[test]
fn p3_properness() {
    let g = arc(path(3));
    assert!(PartialEdgeColoring::from_slice(g.clone(), 2, &[1, 2]).unwrap().validate());
    let bad = PartialEdgeColoring::from_slice(g, 2, &[1, 1]).unwrap();
    assert_eq!(bad.validate_detail(), Err(Violation::Improper { vertex: 1, color: 1 }));
}

#[test]
fn constructor_errors() {
    let g = arc(path(3));
    assert!(matches!(
        PartialEdgeColoring::from_slice(g.clone(), 2, &[0, 0]),
        Err(ColoringError::MultipleUncolored(0, 1))
    ));
    assert!(matches!(
        PartialEdgeColoring::from_slice(g.clone(), 2, &[3, 1]),
        Err(ColoringError::ColorOutOfRange { .. })
    ));
    assert!(matches!(
        PartialEdgeColoring::from_slice(g, 2, &[1]),
        Err(ColoringError::LengthMismatch { .. })
    ));
}

#[test]
fn missing_and_present() {
    let g = arc(SimpleGraph::from_edges(4, [(0, 1), (0, 2)]).unwrap());
    let phi = PartialEdgeColoring::from_slice(g, 3, &[1, 2]).unwrap();
    assert_eq!(phi.missing(3), ColorSet::full(3));
    assert_eq!(phi.missing(0), ColorSet::single(3));
    assert_eq!(phi.present(0).len(), 2);
    let (c5, l) = c5_fixture();
    assert_eq!(c5.missing(l.r), ColorSet::single(1));
    assert_eq!(c5.missing(l.s1), ColorSet::single(2));
    assert!(c5.is_elementary(&[l.r, l.s1]));
    assert!(c5.is_elementary(&[l.a]));
}

#[test]
fn elementary_two_isolated() {
    let g = arc(SimpleGraph::empty(2));
    let phi = PartialEdgeColoring::new(g, 1, vec![]).unwrap();
    assert_eq!(phi.elementary_clash(&[0, 1]), Some((0, 1, 1)));
}

#[test]
fn chain_shapes() {
    let c4 = arc(cycle(4).unwrap());
    // edges (0,1),(0,3),(1,2),(2,3)
    let phi = PartialEdgeColoring::from_slice(c4, 2, &[1, 2, 2, 1]).unwrap();
    let ch = phi.chain_at(2, 1, 2).unwrap();
    assert_eq!(ch.kind, ChainKind::Cycle);
    assert_eq!(ch.vertices, vec![2, 1, 0, 3]);
    let swapped = phi.kempe_swap(&ch).unwrap();
    for v in 0..4 {
        assert_eq!(swapped.missing(v), phi.missing(v));
    }

    let (c5, l) = c5_fixture();
    let p = c5.chain_at(l.s1, 1, 2).unwrap();
    assert_eq!(p.vertices, vec![l.s1, l.a, l.b, l.c, l.r]);
    assert!(c5.are_linked(l.r, l.s1, 1, 2).unwrap());
    // interior vertex: listed from the lower end
    assert_eq!(c5.chain_at(l.b, 1, 2).unwrap().vertices, vec![l.r, l.c, l.b, l.a, l.s1]);
}

#[test]
fn trivial_chain_and_single_edge_swap() {
    let g = arc(SimpleGraph::from_edges(3, [(0, 1)]).unwrap());
    let phi = PartialEdgeColoring::from_slice(g, 2, &[1]).unwrap();
    let t = phi.chain_at(2, 1, 2).unwrap();
    assert!(t.is_trivial() && t.is_path());
    let ch = phi.chain_at(0, 1, 2).unwrap();
    let psi = phi.kempe_swap(&ch).unwrap();
    assert_eq!(psi.color(0), Some(2));
    assert_eq!(psi.kempe_swap(&ch).unwrap(), phi);
    // the chain is stale once the colours moved
    let mut other = psi.clone();
    other.recolor(&[(0, Some(1))]);
    let ch2 = psi.chain_at(0, 1, 2).unwrap();
    assert_eq!(ch2.edges, other.chain_at(0, 1, 2).unwrap().edges);
    let ch3 = phi.chain_at(0, 1, 2).unwrap();
    let third = PartialEdgeColoring::from_slice(phi.graph_arc().clone(), 2, &[0]).unwrap();
    assert_eq!(third.kempe_swap(&ch3), Err(ColoringError::StaleChain));
}

#[test]
fn linkage_errors_and_symmetry() {
    let g = arc(SimpleGraph::empty(2));
    let phi = PartialEdgeColoring::new(g, 2, vec![]).unwrap();
    assert!(!phi.are_linked(0, 1, 1, 2).unwrap());
    assert!(phi.are_linked(0, 0, 1, 2).unwrap());
    let (c5, l) = c5_fixture();
    assert!(matches!(
        c5.are_linked(l.a, l.r, 1, 2),
        Err(ColoringError::BothPresent { vertex: 2, .. })
    ));
    assert_eq!(c5.are_linked(l.s1, l.r, 2, 1), c5.are_linked(l.r, l.s1, 1, 2));
}

#[test]
fn double_swap_on_small_path() {
    // x=0 misses 1; 0-1 coloured 2, 1-2 coloured 1, 2-3 coloured 3, 0-4 coloured 3
    let g = arc(SimpleGraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4)]).unwrap());
    let phi = PartialEdgeColoring::from_slice(g, 3, &[2, 3, 1, 3]).unwrap();
    assert!(phi.validate());
    assert_eq!(phi.double_swap_at(0, 1, 1, 3).unwrap(), phi);
    let psi = phi.double_swap_at(0, 1, 2, 3).unwrap();
    // (1,2) swap on 0-1-2 gives 0-1:1, 1-2:2; then (2,3) at 0 swaps the edge 0-4
    assert_eq!(psi.assignment(), &[Some(1), Some(2), Some(2), Some(3)]);
    assert!(psi.validate());
    assert!(phi.double_swap_at(0, 2, 1, 3).is_err());
}

#[test]
fn serialization_round_trip() {
    let (c5, _) = c5_fixture();
    let line = c5.to_line();
    assert_eq!(line, "2; 0=_,1=2,2=1,3=2,4=1");
    let back = PartialEdgeColoring::from_line(c5.graph_arc().clone(), &line).unwrap();
    assert_eq!(back, c5);
    assert!(PartialEdgeColoring::from_line(c5.graph_arc().clone(), "2; 0=_,1=2").is_err());
}

#[test]
fn relabel_preserves_properness() {
    let (c5, l) = c5_fixture();
    let psi = c5.relabel(&ColorMap::transposition(2, 1, 2)).unwrap();
    assert!(psi.validate());
    assert_eq!(psi.missing(l.r), ColorSet::single(2));
}
