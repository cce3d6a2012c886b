use crate::coloring::{Color, PartialEdgeColoring};
use crate::fan::{normalize_typical, stability_class, EdgeInstance, FanStatus, Multifan, Stability};
use crate::graph::Vertex;
use crate::recolor::{build_tau_sequence, RecolorError, Step, TauKind, Transcript};
use crate::verdict::{Tally, Verdict};
use serde::Serialize;
use serde_json::json;
use std::collections::{HashMap, VecDeque};

/// How far the search backs the claim that `V(S)` stays elementary under
/// every F-stable colouring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum P2Status {
    /// Every colouring reachable by F-stable single swaps was looked at.
    #[serde(rename = "VERIFIED-WITHIN-BUDGET")]
    VerifiedWithinBudget,
    /// A reachable F-stable colouring breaks elementarity.
    #[serde(rename = "VIOLATED")]
    Violated,
    /// The budget ran out first.
    #[serde(rename = "UNKNOWN")]
    Unknown,
}

/// An F-stable colouring under which a vertex set is not elementary.
#[derive(Clone, Debug, Serialize)]
pub struct P2Witness {
    pub coloring: PartialEdgeColoring,
    /// From the start colouring, Kempe swaps only.
    pub transcript: Transcript,
    pub clash: (Vertex, Vertex, Color),
}

#[derive(Clone, Debug, Serialize)]
pub struct Rejected {
    pub vertex: Vertex,
    pub status: P2Status,
    pub witness: P2Witness,
}

/// A maximum multifan extended by (Δ−1)-neighbours of the center.
#[derive(Clone, Debug, Serialize)]
pub struct PFan {
    pub base_fan: Multifan,
    pub base_status: FanStatus,
    pub extension: Vec<Vertex>,
    pub p2_status: P2Status,
    /// Set when the base fan itself stops being elementary.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<P2Witness>,
    /// Candidates turned away, with the colouring that excluded them.
    pub rejected: Vec<Rejected>,
    /// F-stable colourings examined.
    pub explored: usize,
}

impl PFan {
    /// `V(S)`, the center first.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut v = self.base_fan.vertices();
        v.extend_from_slice(&self.extension);
        v
    }
}

struct Node {
    phi: PartialEdgeColoring,
    parent: Option<(usize, Step)>,
}

fn transcript_to(nodes: &[Node], mut i: usize) -> Transcript {
    let mut steps = Vec::new();
    while let Some((p, s)) = &nodes[i].parent {
        steps.push(s.clone());
        i = *p;
    }
    steps.reverse();
    Transcript { steps }
}

/// Colourings reachable from `phi` by single Kempe swaps that keep every
/// intermediate colouring F-stable, breadth first, at most `budget` of
/// them. The flag says whether the search ran dry before the budget.
fn f_stable_closure(phi: &PartialEdgeColoring, fan: &Multifan, budget: usize) -> (Vec<Node>, bool) {
    let mut nodes = vec![Node {
        phi: phi.clone(),
        parent: None,
    }];
    if budget <= 1 {
        return (nodes, false);
    }
    let mut seen: HashMap<Vec<Option<Color>>, usize> = HashMap::new();
    seen.insert(phi.assignment().to_vec(), 0);
    let mut queue = VecDeque::from([0]);
    let n = phi.graph().n();
    let k = phi.k();
    while let Some(i) = queue.pop_front() {
        let cur = nodes[i].phi.clone();
        for a in 1..=k {
            for b in a + 1..=k {
                let mut covered = vec![false; n];
                for v in 0..n {
                    if covered[v] {
                        continue;
                    }
                    let Ok(chain) = cur.chain_at(v, a, b) else { continue };
                    for &w in &chain.vertices {
                        covered[w] = true;
                    }
                    if chain.is_trivial() {
                        continue;
                    }
                    let Ok(next) = cur.kempe_swap(&chain) else { continue };
                    if !matches!(stability_class(&next, phi, fan), Ok(Stability::F)) {
                        continue;
                    }
                    let key = next.assignment().to_vec();
                    if seen.contains_key(&key) {
                        continue;
                    }
                    if nodes.len() >= budget {
                        return (nodes, false);
                    }
                    seen.insert(key, nodes.len());
                    queue.push_back(nodes.len());
                    nodes.push(Node {
                        phi: next,
                        parent: Some((
                            i,
                            Step::Swap {
                                colors: [a, b],
                                anchor: chain.vertices[0],
                            },
                        )),
                    });
                }
            }
        }
    }
    (nodes, true)
}

fn first_clash(nodes: &[Node], vs: &[Vertex]) -> Option<P2Witness> {
    nodes.iter().enumerate().find_map(|(i, nd)| {
        nd.phi.elementary_clash(vs).map(|clash| P2Witness {
            coloring: nd.phi.clone(),
            transcript: transcript_to(nodes, i),
            clash,
        })
    })
}

/// Greedily extends `fan` by (Δ−1)-neighbours of the center, in vertex
/// order, keeping each one only if the extended set stays elementary over
/// the F-stable colourings the search reaches.
///
/// With `budget` zero only `phi` itself is consulted and the status is
/// UNKNOWN.
pub fn grow_pfan(phi: &PartialEdgeColoring, fan: &Multifan, base_status: FanStatus, budget: usize) -> PFan {
    let g = phi.graph();
    let r = fan.center;
    let delta = g.max_degree();
    let (nodes, complete) = f_stable_closure(phi, fan, budget.max(1));
    let base = fan.vertices();
    let mut out = PFan {
        base_fan: fan.clone(),
        base_status,
        extension: Vec::new(),
        p2_status: if complete && budget > 0 {
            P2Status::VerifiedWithinBudget
        } else {
            P2Status::Unknown
        },
        violation: None,
        rejected: Vec::new(),
        explored: nodes.len(),
    };
    if let Some(w) = first_clash(&nodes, &base) {
        out.p2_status = P2Status::Violated;
        out.violation = Some(w);
        return out;
    }
    let mut current = base;
    for v in g.neighbors_of_degree(r, delta.saturating_sub(1)) {
        if current.contains(&v) {
            continue;
        }
        current.push(v);
        if let Some(w) = first_clash(&nodes, &current) {
            current.pop();
            out.rejected.push(Rejected {
                vertex: v,
                status: P2Status::Violated,
                witness: w,
            });
        } else {
            out.extension.push(v);
        }
    }
    out
}

/// Shared gate of the P-fan lemmas: class two, critical `rs1`, a light
/// Δ-vertex as center, (P2) not refuted.
fn pfan_gate(inst: &EdgeInstance, s: &PFan) -> Option<Verdict> {
    if let Some(v) = inst.standard_gate() {
        return Some(v);
    }
    if inst.graph.degree(inst.center) != inst.delta {
        return Some(Verdict::inapplicable("center is not a Δ-vertex"));
    }
    if s.base_fan.center != inst.center || inst.graph.edge_between(inst.center, s.base_fan.s1()) != Some(inst.edge) {
        return Some(Verdict::inapplicable("P-fan does not belong to this edge"));
    }
    if s.p2_status == P2Status::Violated {
        return Some(Verdict::inapplicable("(P2) is refuted, so this is not a P-fan"));
    }
    None
}

/// Downgrades to CONDITIONAL when either P-fan condition is unproven.
fn finish(t: Tally, s: &PFan) -> Verdict {
    let v = t.verdict();
    let mut why = Vec::new();
    if s.base_status == FanStatus::LowerBound {
        why.push("base fan maximality unproven");
    }
    if s.p2_status == P2Status::Unknown {
        why.push("(P2) not settled within budget");
    }
    if why.is_empty() || v.status == crate::verdict::Status::Inapplicable {
        return v;
    }
    Verdict::conditional(format!("{}; unconditional result: {}", why.join(", "), v.status.as_str()))
}

/// For each `v1` off the base fan: its τ-sequence is a rotation and every
/// member is (1, φ̄(v_i))-linked with `r`. For `s_i` in the base fan and
/// `s_j` in the extension: `r` lies on the common chain
/// `P_{s_i}(γ, δ) = P_{s_j}(γ, δ)` and that chain meets `z` before `r`
/// when `φ(rz) = γ`.
pub fn verify_pfan_properties(inst: &EdgeInstance, phi: &PartialEdgeColoring, s: &PFan) -> Verdict {
    if let Some(v) = pfan_gate(inst, s) {
        return v;
    }
    if phi.uncolored() != Some(inst.edge) {
        return Verdict::inapplicable("colouring does not belong to this edge");
    }
    if s.extension.is_empty() {
        return finish_pass(s);
    }
    let (p, fan) = match normalize_typical(phi, &s.base_fan) {
        Ok((p, f, _)) => (p, f),
        Err(e) => return Verdict::inapplicable(format!("fan has no typical form: {e}")),
    };
    let r = inst.center;
    let ev = |extra: serde_json::Value| {
        let mut v = json!({"check": "pfan", "coloring": p.to_line(), "center": r, "fan": fan.sequence, "extension": s.extension});
        if let (serde_json::Value::Object(a), serde_json::Value::Object(b)) = (&mut v, extra) {
            a.extend(b);
        }
        v
    };
    let mut t = Tally::default();
    for &v1 in &s.extension {
        let tau = p.color_between(r, v1).expect("extension edges are coloured");
        match build_tau_sequence(&p, &fan, tau) {
            Ok(seq) if seq.kind == TauKind::A => {
                for (i, &vi) in seq.vertices.iter().enumerate() {
                    let d = seq.missing[i];
                    match p.are_linked(vi, r, 1, d) {
                        Ok(true) => t.add(Verdict::pass(1)),
                        Ok(false) => t.add(Verdict::fail(
                            format!("{vi} and r are not (1,{d})-linked"),
                            ev(json!({"part": "a", "v": vi, "colors": [1, d]})),
                        )),
                        Err(e) => t.add(Verdict::unknown(e.to_string())),
                    }
                }
            }
            Ok(seq) => t.add(Verdict::fail(
                "τ-sequence from the extension is not a rotation",
                ev(json!({"part": "a", "sequence": seq})),
            )),
            Err(e @ RecolorError::MaximalityViolation { .. }) => t.add(Verdict::fail(
                "τ-sequence reaches a Δ-neighbour",
                ev(json!({"part": "a", "v1": v1, "error": e.to_string()})),
            )),
            Err(e) => t.add(Verdict::unknown(e.to_string())),
        }
    }
    for &si in &fan.sequence {
        for &sj in &s.extension {
            for gamma in p.missing(si).iter() {
                for delta in p.missing(sj).iter() {
                    let Ok(chain) = p.chain_at(si, gamma, delta) else {
                        t.add(Verdict::unknown("chain lookup failed"));
                        continue;
                    };
                    if !chain.contains(r) || !chain.contains(sj) {
                        t.add(Verdict::fail(
                            format!("r and {sj} are not on P_{si}({gamma},{delta})"),
                            ev(json!({"part": "b", "si": si, "sj": sj, "colors": [gamma, delta], "chain": chain.vertices})),
                        ));
                        continue;
                    }
                    if let Some(z) = p.neighbor_via(r, gamma) {
                        if chain.meets_before(si, z, r) != Some(true) {
                            t.add(Verdict::fail(
                                format!("P_{si}({gamma},{delta}) reaches r before {z}"),
                                ev(json!({"part": "b", "si": si, "z": z, "colors": [gamma, delta], "chain": chain.vertices})),
                            ));
                            continue;
                        }
                    }
                    t.add(Verdict::pass(1));
                }
            }
        }
    }
    finish(t, s)
}

fn finish_pass(s: &PFan) -> Verdict {
    let mut t = Tally::default();
    t.add(Verdict::pass(0));
    finish(t, s)
}

/// No vertex off `N[r]` adjacent to `V(S)` has degree Δ−1. Needs Δ ≥ 3.
pub fn verify_pfan_adjacency(inst: &EdgeInstance, s: &PFan) -> Verdict {
    if inst.delta < 3 {
        return Verdict::inapplicable("Δ < 3");
    }
    if let Some(v) = pfan_gate(inst, s) {
        return v;
    }
    let g = &inst.graph;
    let r = inst.center;
    let mut t = Tally::default();
    for y in s.vertices() {
        for &x in g.neighbors(y) {
            if x == r || g.has_edge(r, x) {
                continue;
            }
            if g.degree(x) + 1 == inst.delta {
                t.add(Verdict::fail(
                    format!("{x} off N[r] is a (Δ−1)-vertex next to {y}"),
                    json!({"check": "pfan-adjacency", "center": r, "pfan": s.vertices(), "x": x, "y": y}),
                ));
            } else {
                t.add(Verdict::pass(1));
            }
        }
    }
    if t.total() == 0 {
        t.add(Verdict::pass(0));
    }
    finish(t, s)
}
