use crate::coloring::PartialEdgeColoring;
use crate::fan::{EdgeInstance, FanStatus, Multifan};
use crate::verdict::{Tally, Verdict};
use serde_json::json;

/// For a light (Δ−1)-vertex `r` with a maximum multifan, no `x` off `N[r]`
/// that shares a neighbour with `s1` outside `N_{Δ−1}[r]` misses all of
/// `φ̄(r)`. Needs Δ ≥ 3.
pub fn verify_low_center(inst: &EdgeInstance, phi: &PartialEdgeColoring, fan: &Multifan, maximum: FanStatus) -> Verdict {
    if inst.delta < 3 {
        return Verdict::inapplicable("Δ < 3");
    }
    if let Some(v) = inst.critical_gate() {
        return v;
    }
    let g = &inst.graph;
    let (r, s1) = (inst.center, inst.s1);
    if g.degree(r) + 1 != inst.delta || !inst.center_is_light() {
        return Verdict::inapplicable("center is not a light (Δ−1)-vertex");
    }
    if phi.uncolored() != Some(inst.edge) || fan.center != r {
        return Verdict::inapplicable("colouring or fan does not belong to this edge");
    }
    if let Err(e) = fan.validate(phi) {
        return Verdict::inapplicable(format!("not a multifan: {e}"));
    }
    let low = inst.delta - 1;
    // N_{Δ−1}[r]
    let inner = |w: usize| w == r || (g.has_edge(r, w) && g.degree(w) == low);
    let mr = phi.missing(r);
    let mut t = Tally::default();
    for x in 0..g.n() {
        if x == r || g.has_edge(r, x) {
            continue;
        }
        let hit = g.neighbors(x).iter().find(|&&u| g.has_edge(s1, u) && !inner(u));
        let Some(&u) = hit else { continue };
        if mr.is_subset(phi.missing(x)) {
            t.add(Verdict::fail(
                format!("{x} misses every colour missing at r"),
                json!({"check": "low-center", "coloring": phi.to_line(), "center": r, "fan": fan.sequence, "x": x, "u": u}),
            ));
        } else {
            t.add(Verdict::pass(1));
        }
    }
    if t.total() == 0 {
        return Verdict::inapplicable("no vertex off N[r] meets s1 outside N_{Δ−1}[r]");
    }
    let v = t.verdict();
    match maximum {
        FanStatus::Exact => v,
        FanStatus::LowerBound => Verdict::conditional(format!(
            "fan maximality unproven; unconditional result: {}",
            v.status.as_str()
        )),
    }
}
