use super::*;
use crate::graph::{complete, cycle, delete_edge, delete_vertex, petersen, SimpleGraph};

fn arc(g: SimpleGraph) -> Arc<SimpleGraph> {
    Arc::new(g)
}

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

/// Counts proper k-colourings by trying all k^m assignments.
fn naive_count(g: &SimpleGraph, skip: Option<usize>, k: u8) -> usize {
    let edges: Vec<usize> = (0..g.edge_count()).filter(|&e| Some(e) != skip).collect();
    let m = edges.len() as u32;
    let mut count = 0;
    for code in 0..(k as usize).pow(m) {
        let mut x = code;
        let mut colors = vec![0usize; g.edge_count()];
        for &e in &edges {
            colors[e] = x % k as usize + 1;
            x /= k as usize;
        }
        let proper = edges.iter().enumerate().all(|(i, &e)| {
            edges[i + 1..].iter().all(|&f| {
                let (a, b) = g.edge(e);
                let (c, d) = g.edge(f);
                let adjacent = a == c || a == d || b == c || b == d;
                !adjacent || colors[e] != colors[f]
            })
        });
        count += proper as usize;
    }
    count
}

#[test]
fn small_classes() {
    let c4 = chromatic_index(&arc(cycle(4).unwrap()), &cfg()).unwrap();
    assert_eq!((c4.chi_prime, c4.class), (2, EdgeClass::One));
    let c5 = chromatic_index(&arc(cycle(5).unwrap()), &cfg()).unwrap();
    assert_eq!((c5.chi_prime, c5.class), (3, EdgeClass::Two));
    assert!(c5.overfull_shortcut);
    let p = chromatic_index(&arc(petersen()), &cfg()).unwrap();
    assert_eq!((p.chi_prime, p.class), (4, EdgeClass::Two));
    assert!(p.witness.validate() && p.witness.is_complete());
    // the edge-id order reaches the same answer
    let alt = SolverConfig {
        order: EdgeOrder::Index,
        ..cfg()
    };
    assert_eq!(chromatic_index(&arc(petersen()), &alt).unwrap().chi_prime, 4);
    assert_eq!(chromatic_index(&arc(SimpleGraph::empty(3)), &cfg()).unwrap_err(), SolverError::NoEdges);
}

#[test]
fn budget_reports_unknown() {
    let tight = SolverConfig::with_budget(3);
    assert!(matches!(
        chromatic_index(&arc(petersen()), &tight),
        Err(SolverError::BudgetExceeded { budget: 3 })
    ));
}

#[test]
fn criticality_cases() {
    let c5 = arc(cycle(5).unwrap());
    for e in 0..5 {
        assert!(is_critical_edge(&c5, e, &cfg()).unwrap());
    }
    assert!(is_delta_critical(&c5, &cfg()).unwrap());
    // K5 - e is still overfull, so K5 has no critical edge
    let k5 = arc(complete(5));
    assert!(!is_critical_edge(&k5, 0, &cfg()).unwrap());
    assert!(!is_delta_critical(&k5, &cfg()).unwrap());
    let pv = arc(delete_vertex(&petersen(), 0).unwrap());
    let rep = criticality(&pv, &cfg(), false).unwrap();
    assert_eq!(rep.class, EdgeClass::Two);
    assert!(rep.delta_critical);
    assert_eq!(rep.critical_edge_ids().len(), 12);
    let c5_iso = arc(SimpleGraph::from_edges(6, cycle(5).unwrap().edges().to_vec()).unwrap());
    let rep = criticality(&c5_iso, &cfg(), false).unwrap();
    assert!(!rep.delta_critical);
    assert!(rep.note.is_some());
}

#[test]
fn overfull_arithmetic() {
    let c5 = cycle(5).unwrap();
    let k5 = complete(5);
    let pv = delete_vertex(&petersen(), 0).unwrap();
    assert!(is_overfull(&c5) && is_just_overfull(&c5));
    assert!(is_overfull(&k5) && !is_just_overfull(&k5));
    assert!(!is_overfull(&pv));
    assert_eq!(overfull_deficiency(&c5), Ok(0));
    assert_eq!(overfull_deficiency(&k5), Ok(-2));
    assert_eq!(overfull_deficiency(&pv), Ok(2));
    assert_eq!(overfull_deficiency(&cycle(4).unwrap()), Err(OddOrderRequired(4)));
}

#[test]
fn parity_reports() {
    let k4 = chromatic_index(&arc(complete(4)), &cfg()).unwrap();
    let r = parity_check(&k4.witness).unwrap();
    assert_eq!(r.counts, vec![0, 0, 0]);
    assert!(r.violations.is_empty());
    let c6 = chromatic_index(&arc(cycle(6).unwrap()), &cfg()).unwrap();
    assert!(parity_check(&c6.witness).unwrap().violations.is_empty());
    let c5 = chromatic_index(&arc(cycle(5).unwrap()), &cfg()).unwrap();
    let r = parity_check(&c5.witness).unwrap();
    assert!(r.counts.iter().all(|c| c % 2 == 1));
    let (phi, _) = crate::fixtures::c5_fixture();
    assert_eq!(parity_check(&phi), Err(ParityError::Incomplete));
}

#[test]
fn enumeration_counts() {
    let c5 = arc(cycle(5).unwrap());
    let all: Vec<_> = ColoringEnumerator::new(c5.clone(), Some(0), 2, 100, false).collect();
    assert_eq!(all.len(), 2);
    assert!(all.iter().all(|p| p.validate() && p.uncolored() == Some(0)));
    let k2 = arc(complete(2));
    assert_eq!(count_colorings(&k2, Some(0), 1, 10), Some(1));
    let k4 = complete(4);
    let k4e = arc(k4.clone());
    for k in 3..=4 {
        assert_eq!(count_colorings(&k4e, Some(0), k, 1_000_000), Some(naive_count(&k4, Some(0), k)));
    }
    let mut it = ColoringEnumerator::new(k4e.clone(), Some(0), 4, 5, false);
    assert_eq!(it.by_ref().count(), 5);
    assert!(it.truncated());
    // canonical stream divides by relabelling
    let canon = ColoringEnumerator::new(c5, Some(0), 2, 100, true).count();
    assert_eq!(canon, 1);
}

#[test]
fn sampling_is_seeded() {
    let g = arc(delete_edge(&petersen(), 0).unwrap());
    let a = sample_colorings(&g, None, 3, 6, 7, 1_000_000).unwrap();
    let b = sample_colorings(&g, None, 3, 6, 7, 1_000_000).unwrap();
    assert_eq!(a.colorings, b.colorings);
    let c5 = arc(cycle(5).unwrap());
    let s = sample_colorings(&c5, Some(0), 2, 10, 1, 1000).unwrap();
    assert!(s.exhaustive);
    assert_eq!(s.colorings.len(), 2);
}
