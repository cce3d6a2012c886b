use super::*;
use crate::coloring::{ColorSet, PartialEdgeColoring};
use crate::fan::{grow_multifan, EdgeInstance, FanStatus};
use crate::fixtures::c5_fixture;
use crate::graph::from_graph6;
use crate::verdict::Status;
use std::sync::Arc;

fn c5_instance() -> (EdgeInstance, PartialEdgeColoring) {
    let (phi, l) = c5_fixture();
    let e = phi.uncolored().unwrap();
    let inst = EdgeInstance::from_known(phi.graph_arc().clone(), e, l.r, true, true).unwrap();
    (inst, phi)
}

#[test]
fn c5_fan_covers_palette() {
    let (inst, phi) = c5_instance();
    let fan = grow_multifan(&phi, inst.center).unwrap();
    for tau in 1..=2 {
        assert_eq!(build_tau_sequence(&phi, &fan, tau), Err(RecolorError::TauInFan(tau)));
        assert!(all_tau_sequences(&phi, &fan, tau).is_empty());
    }
    assert!(build_tau_sequence(&phi, &fan, 3).is_err());
    let v = verify_tau_sequences(&inst, &phi, &fan, FanStatus::Exact);
    assert_eq!((v.status, v.checked), (Status::Pass, 0));
    let v = verify_rs1_linkage(&inst, &phi, &fan, FanStatus::Exact);
    assert_eq!((v.status, v.checked), (Status::Pass, 0));
    let v = verify_tau_witnesses(&inst, &phi, &fan, FanStatus::Exact, 100);
    assert_eq!(v.status, Status::Inapplicable);
}

#[test]
fn class_one_gates() {
    let (phi, l) = c5_fixture();
    let e = phi.uncolored().unwrap();
    let inst = EdgeInstance::from_known(phi.graph_arc().clone(), e, l.r, false, true).unwrap();
    let fan = grow_multifan(&phi, l.r).unwrap();
    assert_eq!(verify_tau_sequences(&inst, &phi, &fan, FanStatus::Exact).status, Status::Inapplicable);
    assert_eq!(verify_rs1_linkage(&inst, &phi, &fan, FanStatus::Exact).status, Status::Inapplicable);
}

#[test]
fn empty_shift_is_identity() {
    let (phi, l) = c5_fixture();
    let out = shift(&phi, l.r, &[]).unwrap();
    assert_eq!(out.to_line(), phi.to_line());
}

#[test]
fn shift_rejects_bad_ranges() {
    let (phi, l) = c5_fixture();
    assert_eq!(shift(&phi, l.r, &[l.b]), Err(RecolorError::NotNeighbor(l.b)));
    assert_eq!(shift(&phi, l.r, &[l.c]), Err(RecolorError::NotSingleton(l.c, 0)));
    // rs1 is the uncoloured edge
    assert_eq!(shift(&phi, l.r, &[l.s1]), Err(RecolorError::UncoloredSpoke(l.s1)));
}

#[test]
fn improper_shift_leaves_input_alone() {
    // path 0-1-2-3 plus 0-4: colour 01 and 04 so that shifting 04 clashes
    let g = Arc::new(crate::graph::SimpleGraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4)]).unwrap());
    let mut colors = vec![0u8; 4];
    colors[g.edge_between(0, 1).unwrap()] = 1;
    colors[g.edge_between(1, 2).unwrap()] = 2;
    colors[g.edge_between(0, 4).unwrap()] = 2;
    let phi = PartialEdgeColoring::from_slice(g.clone(), 2, &colors).unwrap();
    let before = phi.to_line();
    // 4 misses 1, which 0 already sees on 01
    let err = shift(&phi, 0, &[4]).unwrap_err();
    assert!(matches!(err, RecolorError::Improper { vertex: 0, color: 1 }));
    assert_eq!(shift(&phi, 0, &[4, 4]), Err(RecolorError::Repeated(4)));
    assert_eq!(phi.to_line(), before);
    assert!(phi.validate());
}

#[test]
fn avoidance_examples() {
    let k = 5;
    let s = ColorSet::from_iter([k]);
    assert!(is_avoiding(&Transcript::default(), s));
    let t = Transcript {
        steps: vec![Step::Swap { colors: [2, 4], anchor: 0 }],
    };
    assert!(is_avoiding(&t, s));
    let t = Transcript {
        steps: vec![Step::Swap { colors: [3, k], anchor: 0 }],
    };
    assert!(!is_avoiding(&t, s));
    let t = Transcript {
        steps: vec![
            Step::Shift { center: 0, range: vec![1] },
            Step::Relabel { bijection: vec![[1, k], [k, 1]] },
        ],
    };
    let a = t.avoidance(s);
    assert!(a.avoiding);
    assert_eq!(a.non_kempe_steps, 2);
}

#[test]
fn transcript_round_trip_and_replay() {
    let (phi, l) = c5_fixture();
    let mut d = Derivation::new(&phi);
    d.swap(l.s1, 1, 2).unwrap();
    d.rename(1, 2).unwrap();
    d.shift(l.r, &[]).unwrap();
    let text = serde_json::to_string(&d.transcript).unwrap();
    assert!(text.starts_with("[{\"op\":\"swap\""));
    let back: Transcript = serde_json::from_str(&text).unwrap();
    assert_eq!(back, d.transcript);
    let out = back.replay(&phi).unwrap();
    assert_eq!(out.to_line(), d.current.to_line());
    // swapping then renaming the same pair is the identity on C5
    assert_eq!(out.to_line(), phi.to_line());
}

#[test]
fn replay_stops_at_a_bad_step() {
    let (phi, _) = c5_fixture();
    let t = Transcript {
        steps: vec![Step::Relabel { bijection: vec![[1, 9]] }],
    };
    assert!(t.replay(&phi).is_err());
}

#[test]
fn item_metadata() {
    assert_eq!(TauItem::ALL.len(), 7);
    for it in TauItem::ALL {
        assert_eq!(it.as_str().parse::<TauItem>().unwrap(), it);
    }
    let needs: Vec<bool> = TauItem::ALL.iter().map(|i| i.needs_tau_at_x()).collect();
    assert_eq!(needs, [true, true, false, false, false, false, true]);
    assert_eq!(TauItem::IV.avoided(7, 9), ColorSet::from_iter([2, 7, 9]));
    assert_eq!(TauItem::I.avoided(7, 9), ColorSet::EMPTY);
}

/// Type B sequence ending in Δ for item (iii) is excluded up front.
#[test]
fn excluded_when_terminal_is_delta() {
    // search a small graph family for such an instance rather than hand-build it
    let lines = include_str!("../../tests/fixtures/connected_le7.g6");
    for line in lines.lines() {
        let g = Arc::new(from_graph6(line).unwrap());
        let k = g.max_degree() as u8;
        if k < 3 {
            continue;
        }
        for e in 0..g.edge_count() {
            let (a, b) = g.edge(e);
            let Ok(sample) = crate::solver::sample_colorings(&g, Some(e), k, 4, 1, 200_000) else {
                continue;
            };
            for phi in &sample.colorings {
                for r in [a, b] {
                    let Ok(fan) = grow_multifan(phi, r) else { continue };
                    let Ok((p, f, _)) = crate::fan::normalize_typical(phi, &fan) else { continue };
                    let used = p.missing_union(&f.vertices());
                    for tau in p.palette().difference(used).iter() {
                        let Ok(seq) = build_tau_sequence(&p, &f, tau) else { continue };
                        if seq.kind != (TauKind::B { terminal: k }) {
                            continue;
                        }
                        for x in 0..g.n() {
                            if x == r || g.has_edge(r, x) || p.missing(x).is_disjoint(ColorSet::from_iter([tau, k])) {
                                continue;
                            }
                            let w = witness_tau_item(TauItem::III, &p, &f, x, tau, 10).unwrap();
                            assert_eq!(w.status, WitnessStatus::Excluded, "{line}");
                            assert!(w.transcript.is_empty());
                            return;
                        }
                    }
                }
            }
        }
    }
    panic!("no type B instance ending in Δ among the small graphs");
}
