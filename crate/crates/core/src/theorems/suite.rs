use super::facts::GraphFacts;
use super::implication::{check_parity, check_val};
use super::lemmas::verify_low_center;
use super::pfan::{grow_pfan, verify_pfan_adjacency, verify_pfan_properties};
use crate::coloring::PartialEdgeColoring;
use crate::fan::{
    grow_multifan, kierstead_paths4, search_maximum_multifan, verify_fan_elementary, verify_fan_linkage,
    verify_kp_elementary, verify_stable_swaps, verify_weak_stable_swaps, EdgeInstance, SearchMode,
};
use crate::graph::SimpleGraph;
use crate::recolor::{verify_rs1_linkage, verify_tau_sequences, verify_tau_witnesses};
use crate::solver::sample_colorings;
use crate::verdict::{Tally, Verdict};
use serde::Serialize;
use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

/// Names of the per-instance checks, in report order.
pub const LEMMA_CHECKS: [&str; 13] = [
    "fan-elementary",
    "fan-linkage",
    "stable-swaps",
    "weak-stable-swaps",
    "kierstead-elementary",
    "tau-sequence",
    "rs1-linkage",
    "tau-witness",
    "pfan",
    "pfan-adjacency",
    "low-center",
    "val",
    "parity",
];

/// Checks that need the fan to be maximum.
const MAXIMUM_ONLY: [&str; 6] = ["tau-sequence", "rs1-linkage", "tau-witness", "pfan", "pfan-adjacency", "low-center"];

#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    /// Colourings of `G − e` per critical edge; all of them when there are
    /// no more than this.
    pub colorings: usize,
    pub seed: u64,
    pub node_budget: u64,
    pub fan_mode: SearchMode,
    pub fan_budget: u64,
    pub witness_budget: usize,
    pub pfan_budget: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            colorings: 10,
            seed: 0,
            node_budget: 10_000_000,
            fan_mode: SearchMode::Exhaustive,
            fan_budget: 200_000,
            witness_budget: 5_000,
            pfan_budget: 500,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub lemmas: BTreeMap<String, Tally>,
    /// (edge, center) pairs.
    pub instances: usize,
    /// Distinct (edge, center, colouring) triples examined.
    pub colorings: usize,
    /// Edges whose colourings were all examined.
    pub exhaustive_edges: usize,
    pub critical_edges: usize,
}

impl SuiteReport {
    fn add(&mut self, name: &str, v: Verdict) {
        self.lemmas.entry(name.to_string()).or_default().add(v);
    }

    pub fn merge(&mut self, o: &SuiteReport) {
        for (k, t) in &o.lemmas {
            self.lemmas.entry(k.clone()).or_default().merge(t);
        }
        self.instances += o.instances;
        self.colorings += o.colorings;
        self.exhaustive_edges += o.exhaustive_edges;
        self.critical_edges += o.critical_edges;
    }

    pub fn fails(&self) -> usize {
        self.lemmas.values().map(|t| t.fail).sum()
    }
}

/// Runs every lemma check over the critical edges of `g`, both ends as
/// center, on a sample of colourings of `G − e` plus a colouring carrying
/// a maximum fan.
pub fn run_lemma_suite(g: &Arc<SimpleGraph>, facts: &GraphFacts, cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport::default();
    for name in LEMMA_CHECKS {
        rep.lemmas.insert(name.to_string(), Tally::default());
    }
    rep.add("val", check_val(g, facts));
    if let Some(w) = &facts.witness {
        rep.add("parity", check_parity(w));
    }
    if !facts.class_two() {
        for name in &LEMMA_CHECKS[..11] {
            rep.add(name, Verdict::inapplicable("graph is class one"));
        }
        return rep;
    }
    let k = g.max_degree() as u8;
    let edges = facts.critical_edges();
    rep.critical_edges = edges.len();
    if edges.is_empty() {
        for name in &LEMMA_CHECKS[..11] {
            rep.add(name, Verdict::inapplicable("no critical edge"));
        }
    }
    for e in edges {
        let sample = match sample_colorings(g, Some(e), k, cfg.colorings, cfg.seed, cfg.node_budget) {
            Ok(s) => s,
            Err(err) => {
                for name in &LEMMA_CHECKS[..11] {
                    rep.add(name, Verdict::unknown(format!("edge {e}: {err}")));
                }
                continue;
            }
        };
        rep.exhaustive_edges += usize::from(sample.exhaustive);
        let (a, b) = g.edge(e);
        for r in [a, b] {
            rep.instances += 1;
            let inst = EdgeInstance::from_known(g.clone(), e, r, true, true).expect("r is an end of e");
            run_instance(&mut rep, &inst, &sample.colorings, cfg);
        }
    }
    rep
}

fn run_instance(rep: &mut SuiteReport, inst: &EdgeInstance, sample: &[PartialEdgeColoring], cfg: &SuiteConfig) {
    let (g, e, r) = (&inst.graph, inst.edge, inst.center);
    let best = search_maximum_multifan(g, e, r, sample.first(), cfg.fan_mode, cfg.fan_budget);
    let mut colorings: Vec<&PartialEdgeColoring> = sample.iter().collect();
    if let Ok(b) = &best {
        colorings.push(&b.coloring);
    }
    let mut seen = HashSet::new();
    for phi in colorings {
        if !seen.insert(phi.assignment().to_vec()) {
            continue;
        }
        rep.colorings += 1;
        let fan = match grow_multifan(phi, r) {
            Ok(f) => f,
            Err(err) => {
                rep.add("fan-elementary", Verdict::unknown(err.to_string()));
                continue;
            }
        };
        rep.add("fan-elementary", verify_fan_elementary(inst, phi, &fan));
        rep.add("fan-linkage", verify_fan_linkage(inst, phi, &fan));
        rep.add("stable-swaps", verify_stable_swaps(inst, phi, &fan));
        rep.add("weak-stable-swaps", verify_weak_stable_swaps(inst, phi, &fan));
        match kierstead_paths4(phi, r) {
            Ok(paths) if paths.is_empty() => {
                rep.add("kierstead-elementary", Verdict::inapplicable("no four-vertex Kierstead path"))
            }
            Ok(paths) => {
                for p in paths {
                    rep.add("kierstead-elementary", verify_kp_elementary(inst, phi, &p));
                }
            }
            Err(err) => rep.add("kierstead-elementary", Verdict::unknown(err.to_string())),
        }
        let best = match &best {
            Ok(b) => b,
            Err(err) => {
                for name in MAXIMUM_ONLY {
                    rep.add(name, Verdict::unknown(format!("maximum fan search failed: {err}")));
                }
                continue;
            }
        };
        if fan.size() < best.fan.size() {
            for name in MAXIMUM_ONLY {
                rep.add(name, Verdict::inapplicable("fan is not maximum"));
            }
            continue;
        }
        let status = best.status;
        rep.add("tau-sequence", verify_tau_sequences(inst, phi, &fan, status));
        rep.add("rs1-linkage", verify_rs1_linkage(inst, phi, &fan, status));
        rep.add("tau-witness", verify_tau_witnesses(inst, phi, &fan, status, cfg.witness_budget));
        rep.add("low-center", verify_low_center(inst, phi, &fan, status));
        // the P-fan search is costly, so gate before growing
        let gate = inst.standard_gate().or_else(|| {
            (g.degree(r) != inst.delta).then(|| Verdict::inapplicable("center is not a Δ-vertex"))
        });
        match gate {
            Some(v) => {
                rep.add("pfan", v.clone());
                rep.add("pfan-adjacency", v);
            }
            None => {
                let s = grow_pfan(phi, &fan, status, cfg.pfan_budget);
                rep.add("pfan", verify_pfan_properties(inst, phi, &s));
                rep.add("pfan-adjacency", verify_pfan_adjacency(inst, &s));
            }
        }
    }
}
