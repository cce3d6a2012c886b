//! τ-sequences against a brute-force reading of their definition, and the
//! effect of shifting them, over small graphs.

use fanforge::coloring::{Color, ColorSet, PartialEdgeColoring};
use fanforge::fan::{grow_multifan, stability_class, Multifan, Stability};
use fanforge::graph::{from_graph6, Vertex};
use fanforge::recolor::{build_tau_sequence, shift_tau, unlink_via_shifting, TauKind};
use fanforge::solver::sample_colorings;
use std::collections::BTreeMap;
use std::sync::Arc;

const SMALL: &str = include_str!("fixtures/connected_le7.g6");

/// Every ordered tuple of distinct candidates that meets clauses (i)-(iii)
/// read literally, with the clause that ends it.
fn oracle(phi: &PartialEdgeColoring, fan: &Multifan, tau: Color) -> Vec<(Vec<Vertex>, char)> {
    let g = phi.graph();
    let r = fan.center;
    let delta = g.max_degree();
    let fan_missing = (0..g.n())
        .filter(|&v| v == r || fan.sequence.contains(&v))
        .fold(ColorSet::EMPTY, |a, v| a.union(phi.missing(v)));
    let cands: Vec<Vertex> = (0..g.n())
        .filter(|&v| g.has_edge(r, v) && g.degree(v) == delta - 1 && !fan.sequence.contains(&v) && v != r)
        .collect();
    let single = |v: Vertex| -> Option<Color> {
        let m: Vec<Color> = phi.missing(v).iter().collect();
        (m.len() == 1).then(|| m[0])
    };
    let mut out = Vec::new();
    let mut tuples: Vec<Vec<Vertex>> = cands.iter().map(|&v| vec![v]).collect();
    while let Some(t) = tuples.pop() {
        let ok = (|| {
            if phi.color_between(r, t[0]) != Some(tau) {
                return None;
            }
            let m: Vec<Color> = t.iter().map(|&v| single(v)).collect::<Option<_>>()?;
            let n = t.len();
            for i in 0..n - 1 {
                if fan_missing.contains(m[i]) || m[..i].contains(&m[i]) {
                    return None;
                }
            }
            for i in 1..n {
                if phi.color_between(r, t[i]) != Some(m[i - 1]) {
                    return None;
                }
            }
            let last = m[n - 1];
            let a = last == tau;
            let b = fan_missing.contains(last);
            // φ̄(v_t) = φ̄(v_{i−1}) for some i ∈ [2, t−1]
            let c = (2..n).any(|i| m[i - 2] == last);
            Some(match (a, b, c) {
                (true, false, false) => 'A',
                (false, true, false) => 'B',
                (false, false, true) => 'C',
                (false, false, false) => return None,
                _ => '?',
            })
        })();
        if let Some(kind) = ok {
            out.push((t.clone(), kind));
        }
        for &v in &cands {
            if !t.contains(&v) {
                let mut u = t.clone();
                u.push(v);
                tuples.push(u);
            }
        }
    }
    out
}

struct Case {
    line: &'static str,
    phi: PartialEdgeColoring,
    fan: Multifan,
}

fn cases(per_edge: usize) -> Vec<Case> {
    let mut out = Vec::new();
    for line in SMALL.lines() {
        let g = Arc::new(from_graph6(line).unwrap());
        let k = g.max_degree() as u8;
        if k < 3 {
            continue;
        }
        for e in 0..g.edge_count() {
            let (a, b) = g.edge(e);
            let sample = sample_colorings(&g, Some(e), k, per_edge, 11, 1_000_000).unwrap();
            for phi in sample.colorings {
                for r in [a, b] {
                    let fan = grow_multifan(&phi, r).unwrap();
                    out.push(Case {
                        line,
                        phi: phi.clone(),
                        fan,
                    });
                }
            }
        }
    }
    out
}

fn off_fan(phi: &PartialEdgeColoring, fan: &Multifan) -> Vec<Color> {
    let used = phi.missing_union(&fan.vertices());
    phi.palette().difference(used).iter().collect()
}

#[test]
fn builder_agrees_with_brute_force() {
    let mut kinds: BTreeMap<char, usize> = BTreeMap::new();
    for c in cases(2) {
        for tau in off_fan(&c.phi, &c.fan) {
            let found = oracle(&c.phi, &c.fan, tau);
            assert!(found.len() <= 1, "{} τ={tau}: several sequences {found:?}", c.line);
            assert!(found.iter().all(|(_, k)| *k != '?'), "{}: overlapping types", c.line);
            match build_tau_sequence(&c.phi, &c.fan, tau) {
                Ok(seq) => {
                    assert_eq!(found.len(), 1, "{} τ={tau}: built {:?}, oracle none", c.line, seq.vertices);
                    let (vs, kind) = &found[0];
                    assert_eq!(&seq.vertices, vs, "{}", c.line);
                    assert_eq!(seq.kind_name().chars().next(), Some(*kind));
                    if let TauKind::C { index } = seq.kind {
                        assert_eq!(seq.missing[index - 2], seq.terminal_color());
                    }
                    *kinds.entry(*kind).or_default() += 1;
                }
                Err(_) => assert!(found.is_empty(), "{} τ={tau}: oracle found {found:?}", c.line),
            }
        }
    }
    for k in ['A', 'B', 'C'] {
        assert!(kinds.get(&k).copied().unwrap_or(0) > 0, "no type {k} sequence seen: {kinds:?}");
    }
}

#[test]
fn shifting_preserves_the_fan() {
    let (mut a_seen, mut b_seen) = (0, 0);
    for c in cases(2) {
        for tau in off_fan(&c.phi, &c.fan) {
            let Ok(seq) = build_tau_sequence(&c.phi, &c.fan, tau) else { continue };
            let out = shift_tau(&c.phi, &seq);
            if !seq.shift_eligible(&c.phi) {
                assert!(out.is_err());
                continue;
            }
            let Ok(out) = out else { continue };
            assert!(out.validate());
            let st = stability_class(&out, &c.phi, &c.fan).unwrap();
            for (i, &v) in seq.vertices.iter().enumerate() {
                assert_eq!(out.color_between(seq.center, v), Some(seq.missing[i]));
            }
            match seq.kind {
                TauKind::A => {
                    assert_eq!(st, Stability::F, "{}", c.line);
                    a_seen += 1;
                }
                TauKind::B { terminal } => {
                    assert!(st >= Stability::VFMinusR, "{}", c.line);
                    let m = out.missing(seq.center);
                    assert!(m.contains(tau) && !m.contains(terminal));
                    b_seen += 1;
                }
                TauKind::C { .. } => unreachable!(),
            }
        }
    }
    assert!(a_seen > 0 && b_seen > 0, "A {a_seen}, B {b_seen}");
}

#[test]
fn shifting_cuts_a_chain_through_rv1() {
    let mut hits = 0;
    for c in cases(2) {
        for tau in off_fan(&c.phi, &c.fan) {
            let Ok(seq) = build_tau_sequence(&c.phi, &c.fan, tau) else { continue };
            if !seq.shift_eligible(&c.phi) {
                continue;
            }
            let v1 = seq.vertices[0];
            let r = seq.center;
            for other in c.phi.palette().iter().filter(|&o| o != tau) {
                let chain = c.phi.chain_at(v1, tau, other).unwrap();
                let Some((x, y)) = chain.endpoints() else { continue };
                if [x, y].iter().any(|z| seq.vertices.contains(z) || *z == r) {
                    continue;
                }
                let Ok(u) = unlink_via_shifting(&c.phi, &seq, other, x, y) else { continue };
                assert!(u.coloring.validate());
                assert_eq!(u.transcript.replay(&c.phi).unwrap().to_line(), u.coloring.to_line());
                // v1 now misses τ and ends its own chain
                assert!(!(u.x_meets_v1 && u.y_meets_v1), "{}", c.line);
                hits += 1;
            }
        }
    }
    assert!(hits > 0);
}
