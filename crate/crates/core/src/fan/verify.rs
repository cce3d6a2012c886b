use super::{inducing_map, normalize_typical, stability_class, EdgeInstance, FanError, Multifan, Stability};
use crate::coloring::{Color, PartialEdgeColoring};
use crate::verdict::{Tally, Verdict};
use serde_json::{json, Value};

fn evidence(phi: &PartialEdgeColoring, fan: &Multifan, extra: Value) -> Value {
    let mut v = json!({
        "coloring": phi.to_line(),
        "center": fan.center,
        "fan": fan.sequence,
    });
    if let (Value::Object(base), Value::Object(more)) = (&mut v, extra) {
        base.extend(more);
    }
    v
}

fn fan_gate(inst: &EdgeInstance, phi: &PartialEdgeColoring, fan: &Multifan) -> Option<Verdict> {
    if let Some(v) = inst.critical_gate() {
        return Some(v);
    }
    if phi.uncolored() != Some(inst.edge) || fan.center != inst.center {
        return Some(Verdict::inapplicable("colouring or fan does not belong to this edge"));
    }
    if let Err(e) = fan.validate(phi) {
        return Some(Verdict::inapplicable(format!("not a multifan: {e}")));
    }
    None
}

/// The vertices of a multifan at a critical edge of a class-two graph are
/// elementary.
pub fn verify_fan_elementary(inst: &EdgeInstance, phi: &PartialEdgeColoring, fan: &Multifan) -> Verdict {
    if let Some(v) = fan_gate(inst, phi, fan) {
        return v;
    }
    match phi.elementary_clash(&fan.vertices()) {
        None => Verdict::pass(1),
        Some((x, y, c)) => Verdict::fail(
            "fan is not elementary",
            evidence(phi, fan, json!({"check": "fan-elementary", "clash": [x, y], "color": c})),
        ),
    }
}

/// The three linkage statements for a multifan:
/// (a) `r` and `s_i` are (γ,δ)-linked for γ ∈ φ̄(r), δ ∈ φ̄(s_i);
/// (b) colours induced by different colours of φ̄(s1) sit on linked vertices;
/// (c) for the same inducer, unlinked `s_i`, `s_j` with `j > i` have
///     `r ∈ P_{s_j}(δ, λ)`.
pub fn verify_fan_linkage(inst: &EdgeInstance, phi: &PartialEdgeColoring, fan: &Multifan) -> Verdict {
    if let Some(v) = fan_gate(inst, phi, fan) {
        return v;
    }
    let map = match inducing_map(phi, fan) {
        Ok(m) => m,
        Err(FanError::NotElementary(x, y, c)) => {
            return Verdict::fail(
                "fan is not elementary",
                evidence(phi, fan, json!({"check": "fan-linkage", "clash": [x, y], "color": c})),
            )
        }
        Err(e) => return Verdict::inapplicable(e.to_string()),
    };
    let r = fan.center;
    let mut checked = 0;
    let fail = |part: &str, extra: Value| {
        let mut extra = extra;
        extra["check"] = json!("fan-linkage");
        extra["part"] = json!(part);
        Verdict::fail(format!("linkage ({part}) violated"), evidence(phi, fan, extra))
    };
    for gamma in phi.missing(r).iter() {
        for &s in &fan.sequence {
            for delta in phi.missing(s).iter() {
                checked += 1;
                if !phi.are_linked(r, s, gamma, delta).unwrap_or(false) {
                    return fail("a", json!({"vertex": s, "colors": [gamma, delta]}));
                }
            }
        }
    }
    let entries = &map.entries;
    for (i, d) in entries.iter().enumerate() {
        for l in &entries[i + 1..] {
            let (pi, pj) = (fan.position(d.vertex).unwrap(), fan.position(l.vertex).unwrap());
            if pi == pj {
                continue;
            }
            checked += 1;
            let linked = phi.are_linked(d.vertex, l.vertex, d.color, l.color).unwrap_or(false);
            if d.inducer != l.inducer {
                if !linked {
                    return fail(
                        "b",
                        json!({"vertices": [d.vertex, l.vertex], "colors": [d.color, l.color]}),
                    );
                }
            } else if !linked {
                // the later vertex's chain must run through the center
                let later = if pi > pj { d.vertex } else { l.vertex };
                let through = phi
                    .chain_at(later, d.color, l.color)
                    .map(|c| c.contains(r))
                    .unwrap_or(false);
                if !through {
                    return fail(
                        "c",
                        json!({"vertices": [d.vertex, l.vertex], "colors": [d.color, l.color]}),
                    );
                }
            }
        }
    }
    Verdict::pass(checked)
}

fn typical_for(
    inst: &EdgeInstance,
    phi: &PartialEdgeColoring,
    fan: &Multifan,
) -> Result<(PartialEdgeColoring, Multifan), Verdict> {
    if let Some(v) = fan_gate(inst, phi, fan) {
        return Err(v);
    }
    if !inst.center_is_light() {
        return Err(Verdict::inapplicable("center is not light"));
    }
    match normalize_typical(phi, fan) {
        Ok((p, f, _)) => Ok((p, f)),
        Err(FanError::NotElementary(x, y, c)) => Err(Verdict::fail(
            "fan is not elementary",
            evidence(phi, fan, json!({"check": "typical", "clash": [x, y], "color": c})),
        )),
        Err(e) => Err(Verdict::inapplicable(format!("fan has no typical form: {e}"))),
    }
}

/// Swaps off the fan that keep it stable: `P_x(1,γ)`, and for r-avoiding
/// chains `P_x(γ,Δ)` (γ 2-inducing) and `P_x(2,γ)` (γ Δ-inducing).
pub fn verify_stable_swaps(inst: &EdgeInstance, phi: &PartialEdgeColoring, fan: &Multifan) -> Verdict {
    let (phi, fan) = match typical_for(inst, phi, fan) {
        Ok(t) => t,
        Err(v) => return v,
    };
    swap_family(&phi, &fan, true)
}

/// Without the r-avoiding proviso the 2-inducing and Δ-inducing swaps
/// still give V(F)-stable colourings.
pub fn verify_weak_stable_swaps(inst: &EdgeInstance, phi: &PartialEdgeColoring, fan: &Multifan) -> Verdict {
    if let Some(v) = inst.standard_gate() {
        return v;
    }
    let (phi, fan) = match typical_for(inst, phi, fan) {
        Ok(t) => t,
        Err(v) => return v,
    };
    swap_family(&phi, &fan, false)
}

fn swap_family(phi: &PartialEdgeColoring, fan: &Multifan, strict: bool) -> Verdict {
    let g = phi.graph();
    let k = phi.k();
    let map = match inducing_map(phi, fan) {
        Ok(m) => m,
        Err(e) => return Verdict::inapplicable(e.to_string()),
    };
    let r = fan.center;
    let mut tally = Tally::default();
    let fan_colors = fan.missing_union();
    let check = |x: usize, a: Color, b: Color, want: Stability, label: &str| -> Verdict {
        let next = match phi.swap_at(x, a, b) {
            Ok(p) => p,
            Err(e) => return Verdict::unknown(e.to_string()),
        };
        match stability_class(&next, phi, fan) {
            Ok(s) if s >= want => Verdict::pass(1),
            Ok(s) => Verdict::fail(
                format!("{label} swap gave a {} colouring", s.as_str()),
                evidence(
                    phi,
                    fan,
                    json!({"check": label, "x": x, "colors": [a, b], "got": s.as_str()}),
                ),
            ),
            Err(e) => Verdict::unknown(e.to_string()),
        }
    };
    for x in (0..g.n()).filter(|&x| !fan.contains(x)) {
        let mx = phi.missing(x);
        for gamma in fan_colors.iter() {
            if strict && gamma != 1 && (mx.contains(1) || mx.contains(gamma)) {
                tally.add(check(x, 1, gamma, Stability::F, "stable-swap-1"));
            }
            let (pair, want_label) = match map.inducer_of(gamma) {
                Some(2) if gamma != k => ((gamma, k), "stable-swap-2"),
                Some(i) if i == k && gamma != 2 => ((2, gamma), "stable-swap-delta"),
                _ => continue,
            };
            if !(mx.contains(pair.0) || mx.contains(pair.1)) || pair.0 == pair.1 {
                continue;
            }
            if strict {
                let through = phi.chain_at(x, pair.0, pair.1).map(|c| c.contains(r)).unwrap_or(true);
                if !through {
                    tally.add(check(x, pair.0, pair.1, Stability::F, want_label));
                }
            } else {
                let label = if want_label == "stable-swap-2" {
                    "weak-stable-swap-2"
                } else {
                    "weak-stable-swap-delta"
                };
                tally.add(check(x, pair.0, pair.1, Stability::VF, label));
            }
        }
    }
    if tally.total() == 0 {
        return Verdict::inapplicable("no vertex off the fan meets a swap precondition");
    }
    tally.verdict()
}
