use super::{all_tau_sequences, build_tau_sequence, witness_tau_item, RecolorError, TauItem, TauKind, WitnessStatus};
use crate::coloring::{Color, PartialEdgeColoring};
use crate::fan::{normalize_typical, EdgeInstance, FanError, FanStatus, Multifan};
use crate::verdict::{Tally, Verdict};
use serde_json::{json, Value};

/// Shared gates. `Ok(None)` means the colour quantifier is empty.
fn prepare(
    inst: &EdgeInstance,
    phi: &PartialEdgeColoring,
    fan: &Multifan,
) -> Result<Option<(PartialEdgeColoring, Multifan)>, Verdict> {
    if let Some(v) = inst.critical_gate() {
        return Err(v);
    }
    if phi.uncolored() != Some(inst.edge) || fan.center != inst.center {
        return Err(Verdict::inapplicable("colouring or fan does not belong to this edge"));
    }
    if let Err(e) = fan.validate(phi) {
        return Err(Verdict::inapplicable(format!("not a multifan: {e}")));
    }
    if phi.missing_union(&fan.vertices()) == phi.palette() {
        return Ok(None);
    }
    if let Some(v) = inst.standard_gate() {
        return Err(v);
    }
    match normalize_typical(phi, fan) {
        Ok((p, f, _)) => Ok(Some((p, f))),
        Err(FanError::NotElementary(..)) => Err(Verdict::inapplicable("fan is not elementary")),
        Err(e) => Err(Verdict::inapplicable(format!("fan has no typical form: {e}"))),
    }
}

fn outside(phi: &PartialEdgeColoring, fan: &Multifan) -> Vec<Color> {
    let used = phi.missing_union(&fan.vertices());
    phi.palette().difference(used).iter().collect()
}

/// Downgrades the result when maximality is not proven.
fn finish(t: Tally, maximum: FanStatus) -> Verdict {
    let v = t.verdict();
    match maximum {
        FanStatus::Exact => v,
        FanStatus::LowerBound => Verdict::conditional(match &v.reason {
            Some(r) => format!("fan maximality unproven; unconditional result: {} ({r})", v.status.as_str()),
            None => format!("fan maximality unproven; unconditional result: {}", v.status.as_str()),
        }),
    }
}

fn evidence(phi: &PartialEdgeColoring, fan: &Multifan, extra: Value) -> Value {
    let mut v = json!({"coloring": phi.to_line(), "center": fan.center, "fan": fan.sequence});
    if let (Value::Object(a), Value::Object(b)) = (&mut v, extra) {
        a.extend(b);
    }
    v
}

/// For a maximum typical fan every colour τ off the fan has exactly one
/// τ-sequence, and it ends in exactly one of the three ways.
pub fn verify_tau_sequences(
    inst: &EdgeInstance,
    phi: &PartialEdgeColoring,
    fan: &Multifan,
    maximum: FanStatus,
) -> Verdict {
    let (phi, fan) = match prepare(inst, phi, fan) {
        Ok(Some(p)) => p,
        Ok(None) => return Verdict::pass(0),
        Err(v) => return v,
    };
    let mut t = Tally::default();
    for tau in outside(&phi, &fan) {
        let fail = |why: &str, extra: Value| {
            let mut extra = extra;
            extra["check"] = json!("tau-sequence");
            extra["tau"] = json!(tau);
            Verdict::fail(why.to_string(), evidence(&phi, &fan, extra))
        };
        let seq = match build_tau_sequence(&phi, &fan, tau) {
            Ok(s) => s,
            Err(RecolorError::MaximalityViolation { vertex, color }) => {
                t.add(fail(
                    "τ-sequence reaches a Δ-neighbour",
                    json!({"vertex": vertex, "color": color}),
                ));
                continue;
            }
            Err(e) => {
                t.add(Verdict::unknown(e.to_string()));
                continue;
            }
        };
        let all = all_tau_sequences(&phi, &fan, tau);
        if all != [seq.vertices.clone()] {
            t.add(fail(
                "τ-sequence is not unique",
                json!({"built": seq.vertices, "found": all}),
            ));
            continue;
        }
        let m = &seq.missing;
        let last = *m.last().unwrap();
        let fan_colors = phi.missing_union(&fan.vertices());
        let t_len = m.len();
        let holds = [
            last == tau,
            fan_colors.contains(last),
            t_len >= 3 && m[..t_len - 2].contains(&last),
        ];
        let tag = match seq.kind {
            TauKind::A => 0,
            TauKind::B { .. } => 1,
            TauKind::C { .. } => 2,
        };
        if holds.iter().filter(|&&h| h).count() != 1 || !holds[tag] {
            t.add(fail("τ-sequence type is not exactly one of A, B, C", json!({"sequence": seq})));
            continue;
        }
        t.add(Verdict::pass(1));
    }
    finish(t, maximum)
}

/// For a maximum typical fan and τ off the fan, `r` lies on both
/// `P_{s1}(τ, Δ)` and `P_{s1}(2, τ)`.
pub fn verify_rs1_linkage(
    inst: &EdgeInstance,
    phi: &PartialEdgeColoring,
    fan: &Multifan,
    maximum: FanStatus,
) -> Verdict {
    let (phi, fan) = match prepare(inst, phi, fan) {
        Ok(Some(p)) => p,
        Ok(None) => return Verdict::pass(0),
        Err(v) => return v,
    };
    let (r, s1, k) = (fan.center, fan.s1(), phi.k());
    let mut t = Tally::default();
    for tau in outside(&phi, &fan) {
        for other in [k, 2] {
            let v = match phi.chain_at(s1, tau, other) {
                Ok(c) if c.contains(r) => Verdict::pass(1),
                Ok(c) => Verdict::fail(
                    format!("r is not on the ({tau},{other})-chain at s1"),
                    evidence(
                        &phi,
                        &fan,
                        json!({"check": "rs1-linkage", "tau": tau, "colors": [tau, other], "chain": c.vertices}),
                    ),
                ),
                Err(e) => Verdict::unknown(e.to_string()),
            };
            t.add(v);
        }
    }
    finish(t, maximum)
}

/// Runs every item at every eligible `(x, τ)` and checks each witness:
/// the transcript replays to the reported colouring and its Kempe changes
/// avoid the item's colours.
pub fn verify_tau_witnesses(
    inst: &EdgeInstance,
    phi: &PartialEdgeColoring,
    fan: &Multifan,
    maximum: FanStatus,
    budget: usize,
) -> Verdict {
    let (phi, fan) = match prepare(inst, phi, fan) {
        Ok(Some(p)) => p,
        Ok(None) => return Verdict::inapplicable("every colour is missing on the fan"),
        Err(v) => return v,
    };
    let g = phi.graph();
    let r = fan.center;
    let k = phi.k();
    let xs: Vec<usize> = (0..g.n()).filter(|&x| x != r && !g.has_edge(r, x)).collect();
    if xs.is_empty() {
        return Verdict::inapplicable("N[r] is the whole vertex set");
    }
    let mut t = Tally::default();
    for tau in outside(&phi, &fan) {
        for &x in &xs {
            let mx = phi.missing(x);
            if !mx.contains(tau) && !mx.contains(k) {
                continue;
            }
            for item in TauItem::ALL {
                if item.needs_tau_at_x() && !mx.contains(tau) {
                    continue;
                }
                t.add(check_item(&phi, &fan, item, x, tau, budget));
            }
        }
    }
    if t.total() == 0 {
        return Verdict::inapplicable("no vertex off N[r] misses τ or Δ");
    }
    finish(t, maximum)
}

fn check_item(phi: &PartialEdgeColoring, fan: &Multifan, item: TauItem, x: usize, tau: Color, budget: usize) -> Verdict {
    let base = json!({"check": "tau-witness", "item": item, "x": x, "tau": tau});
    let w = match witness_tau_item(item, phi, fan, x, tau, budget) {
        Ok(w) => w,
        Err(e @ RecolorError::MaximalityViolation { .. }) => {
            let mut ev = base;
            ev["error"] = json!(e.to_string());
            return Verdict::fail("τ-sequence reaches a Δ-neighbour", evidence(phi, fan, ev));
        }
        Err(e) => return Verdict::unknown(e.to_string()),
    };
    match w.status {
        WitnessStatus::Witness | WitnessStatus::Excluded => {
            if let Some(end) = &w.coloring {
                let replay = w.transcript.replay(phi).map(|p| p.to_line());
                if replay.as_deref() != Ok(end.to_line().as_str()) {
                    return Verdict::fail("transcript does not replay", evidence(phi, fan, json!({"witness": w})));
                }
                if !super::is_avoiding(&w.transcript, w.avoided) {
                    return Verdict::fail("transcript uses an avoided colour", evidence(phi, fan, json!({"witness": w})));
                }
            }
            Verdict::pass(1)
        }
        WitnessStatus::Fail => Verdict::fail(
            format!("item ({item}) has no witness"),
            evidence(phi, fan, json!({"witness": w})),
        ),
        WitnessStatus::Unknown => Verdict::unknown(format!(
            "item ({item}) at x={x}, τ={tau}: {}",
            w.reason.unwrap_or_default()
        )),
    }
}
