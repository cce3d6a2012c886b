use super::facts::{light_delta_vertices, GraphFacts};
use crate::graph::SimpleGraph;
use crate::solver::{criticality, parity_check, EdgeOrder, SolverConfig};
use crate::verdict::Verdict;
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremName {
    /// Off-fan neighbours of a (Δ−1)-neighbour of a light vertex are Δ-vertices.
    S1Adj,
    /// Low-degree vertices off `N[r]` share neighbours with `s` only inside `N(r) ∖ N_Δ(r)`.
    Longk,
    /// Large Δ with a sparse core forces odd order.
    Longk2,
    /// Large Δ with a sparse core forces overfull.
    Main,
}

impl TheoremName {
    pub const ALL: [TheoremName; 4] = [Self::S1Adj, Self::Longk, Self::Longk2, Self::Main];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::S1Adj => "s1-adj",
            Self::Longk => "longk",
            Self::Longk2 => "longk2",
            Self::Main => "main",
        }
    }
}

impl fmt::Display for TheoremName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown theorem {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConjectureName {
    JustOverfull,
    Overfull,
}

impl ConjectureName {
    pub const ALL: [ConjectureName; 2] = [Self::JustOverfull, Self::Overfull];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::JustOverfull => "just-overfull",
            Self::Overfull => "overfull",
        }
    }
}

impl FromStr for ConjectureName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown conjecture {s:?}"))
    }
}

/// Every critical edge `xy` has `x` adjacent to at least `Δ − d(y) + 1`
/// Δ-vertices other than `y`, in both directions.
pub fn check_val(g: &SimpleGraph, facts: &GraphFacts) -> Verdict {
    if !facts.class_two() {
        return Verdict::inapplicable("graph is class one");
    }
    let delta = g.max_degree();
    let mut checked = 0;
    for e in facts.critical_edges() {
        let (a, b) = g.edge(e);
        for (x, y) in [(a, b), (b, a)] {
            let have = g
                .neighbors(x)
                .iter()
                .filter(|&&w| w != y && g.degree(w) == delta)
                .count();
            let need = delta + 1 - g.degree(y);
            if have < need {
                return Verdict::fail(
                    format!("{x} has {have} Δ-neighbours besides {y}, needs {need}"),
                    json!({"check": "val", "edge": [x, y], "have": have, "need": need}),
                );
            }
            checked += 1;
        }
    }
    Verdict::pass(checked)
}

/// Hypothesis-gated check of one theorem. Theorems never pass vacuously:
/// when no instance meets the hypotheses the verdict is INAPPLICABLE.
pub fn check_theorem(name: TheoremName, g: &SimpleGraph, facts: &GraphFacts) -> Verdict {
    match name {
        TheoremName::S1Adj => s1_adj(g, facts),
        TheoremName::Longk => longk(g, facts),
        TheoremName::Longk2 | TheoremName::Main => large_delta(name, g, facts),
    }
}

fn s1_adj(g: &SimpleGraph, facts: &GraphFacts) -> Verdict {
    if !facts.class_two() {
        return Verdict::inapplicable("graph is class one");
    }
    let delta = g.max_degree();
    let mut checked = 0;
    for r in light_delta_vertices(g) {
        for &s in g.neighbors(r) {
            if g.degree(s) >= delta || !facts.is_critical(g.edge_between(r, s).unwrap()) {
                continue;
            }
            for &w in g.neighbors(s) {
                if w != r && !g.has_edge(r, w) && g.degree(w) != delta {
                    return Verdict::fail(
                        format!("{w} is a neighbour of {s} off N({r}) with degree {}", g.degree(w)),
                        json!({"check": "s1-adj", "r": r, "s": s, "x": w, "degree": g.degree(w), "delta": delta}),
                    );
                }
            }
            checked += 1;
        }
    }
    if checked == 0 {
        return Verdict::inapplicable("no light Δ-vertex with a critical edge to a lower-degree neighbour");
    }
    Verdict::pass(checked)
}

fn longk(g: &SimpleGraph, facts: &GraphFacts) -> Verdict {
    if !facts.class_two() {
        return Verdict::inapplicable("graph is class one");
    }
    let delta = g.max_degree();
    if delta < 3 {
        return Verdict::inapplicable("Δ < 3 leaves no vertex of degree at most Δ − 3");
    }
    let mut checked = 0;
    for r in light_delta_vertices(g) {
        for s in g.neighbors_of_degree(r, delta - 1) {
            if !facts.is_critical(g.edge_between(r, s).unwrap()) {
                continue;
            }
            for x in 0..g.n() {
                if x == r || g.has_edge(r, x) || g.degree(x) + 3 > delta {
                    continue;
                }
                for &w in g.neighbors(x) {
                    let allowed = g.has_edge(r, w) && g.degree(w) != delta;
                    if g.has_edge(s, w) && !allowed {
                        return Verdict::fail(
                            format!("common neighbour {w} of {x} and {s} lies outside N({r}) ∖ N_Δ({r})"),
                            json!({"check": "longk", "r": r, "s": s, "x": x, "w": w}),
                        );
                    }
                }
                checked += 1;
            }
        }
    }
    if checked == 0 {
        return Verdict::inapplicable("no vertex of degree at most Δ − 3 off N[r] for a light r");
    }
    Verdict::pass(checked)
}

fn large_delta(name: TheoremName, g: &SimpleGraph, facts: &GraphFacts) -> Verdict {
    let (n, delta) = (g.n(), g.max_degree());
    // Δ > n/2 + 1
    if 2 * delta <= n + 2 {
        return Verdict::inapplicable(format!("Δ = {delta} is not above n/2 + 1 = {}", n as f64 / 2.0 + 1.0));
    }
    if facts.core_min_degree > 2 {
        return Verdict::inapplicable(format!("δ(G_Δ) = {} > 2", facts.core_min_degree));
    }
    if !facts.delta_critical {
        return Verdict::inapplicable("graph is not Δ-critical");
    }
    let (holds, what) = match name {
        TheoremName::Longk2 => (n % 2 == 1, "order is even"),
        _ => (facts.overfull, "graph is not overfull"),
    };
    if holds {
        Verdict::pass(1)
    } else {
        Verdict::fail(
            what,
            json!({"check": name.as_str(), "n": n, "m": g.edge_count(), "delta": delta, "core_min_degree": facts.core_min_degree}),
        )
    }
}

/// Hypothesis-gated conjecture check. A FAIL is confirmed by deciding
/// Δ-criticality again with the edges in index order; if the second pass
/// disagrees the verdict is UNKNOWN.
pub fn check_conjecture(name: ConjectureName, g: &Arc<SimpleGraph>, facts: &GraphFacts, cfg: &SolverConfig) -> Verdict {
    if !facts.delta_critical {
        return Verdict::inapplicable("graph is not Δ-critical");
    }
    let (n, m, delta) = (g.n(), g.edge_count(), g.max_degree());
    let (hyp, concl, target) = match name {
        // Δ ≥ n/2
        ConjectureName::JustOverfull => (2 * delta >= n, facts.just_overfull, "just overfull"),
        // Δ > n/3
        ConjectureName::Overfull => (3 * delta > n, facts.overfull, "overfull"),
    };
    if !hyp {
        return Verdict::inapplicable(format!("Δ = {delta} is below the threshold for n = {n}"));
    }
    if concl {
        return Verdict::pass(1);
    }
    let again = SolverConfig {
        order: EdgeOrder::Index,
        ..*cfg
    };
    match criticality(g, &again, true) {
        Ok(r) if r.delta_critical => Verdict::fail(
            format!("Δ-critical graph is not {target}"),
            json!({
                "check": name.as_str(),
                "n": n,
                "m": m,
                "delta": delta,
                "just_overfull_count": delta * (n / 2) + 1,
                "overfull_threshold": delta * (n / 2),
                "double_checked": true,
            }),
        ),
        Ok(_) => Verdict::unknown("the two criticality passes disagree"),
        Err(e) => Verdict::unknown(e.to_string()),
    }
}

/// Each colour is missing at `n mod 2` vertices, modulo 2, in a complete
/// colouring.
pub fn check_parity(phi: &crate::coloring::PartialEdgeColoring) -> Verdict {
    match parity_check(phi) {
        Err(e) => Verdict::inapplicable(e.to_string()),
        Ok(r) if r.violations.is_empty() => Verdict::pass(r.counts.len()),
        Ok(r) => Verdict::fail(
            "colour missing at a count of the wrong parity",
            json!({"check": "parity", "coloring": phi.to_line(), "counts": r.counts, "colors": r.violations}),
        ),
    }
}
