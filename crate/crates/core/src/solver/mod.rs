//! Exact chromatic index, edge criticality, overfullness and colouring
//! enumeration for small graphs.

mod enumerate;
mod overfull;
mod search;

pub use enumerate::{count_colorings, sample_colorings, ColoringEnumerator, Sample};
pub use overfull::{
    is_just_overfull, is_overfull, overfull_deficiency, parity_check, OddOrderRequired,
    ParityError, ParityReport,
};
pub use search::EdgeOrder;

use crate::coloring::PartialEdgeColoring;
use crate::graph::{EdgeId, SimpleGraph};
use search::{edge_order, Search};
use serde::Serialize;
use std::sync::Arc;
use thiserror::Error;

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("graph has no edges")]
    NoEdges,
    #[error("node budget of {budget} exhausted")]
    BudgetExceeded { budget: u64 },
    #[error("palette of {0} colours is not supported")]
    PaletteTooLarge(usize),
    #[error("edge id {0} out of range")]
    BadEdge(EdgeId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub node_budget: u64,
    pub order: EdgeOrder,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            node_budget: DEFAULT_NODE_BUDGET,
            order: EdgeOrder::DegreeSum,
        }
    }
}

impl SolverConfig {
    pub fn with_budget(node_budget: u64) -> Self {
        SolverConfig {
            node_budget,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeClass {
    One,
    Two,
}

#[derive(Clone, Debug)]
pub struct ClassVerdict {
    pub chi_prime: usize,
    pub class: EdgeClass,
    /// Complete proper colouring with `chi_prime` colours.
    pub witness: PartialEdgeColoring,
    pub nodes: u64,
    /// Class two was read off the edge count.
    pub overfull_shortcut: bool,
    /// The Δ-core is a forest, so class one was known in advance.
    pub core_acyclic: bool,
}

/// Outcome of a single colourability question.
pub enum Colorable {
    Yes(PartialEdgeColoring),
    No,
}

/// Searches for a proper `k`-colouring of `g - skip`.
pub fn find_coloring(
    g: &Arc<SimpleGraph>,
    k: usize,
    skip: Option<EdgeId>,
    cfg: &SolverConfig,
) -> Result<(Colorable, u64), SolverError> {
    if k > crate::coloring::MAX_COLORS {
        return Err(SolverError::PaletteTooLarge(k));
    }
    if let Some(e) = skip {
        if e >= g.edge_count() {
            return Err(SolverError::BadEdge(e));
        }
    }
    let order = edge_order(g, skip, cfg.order);
    // each colour class is a matching
    if order.len() > k * (g.n() / 2) {
        return Ok((Colorable::No, 0));
    }
    if k == 0 {
        let ok = order.is_empty();
        let out = if ok {
            let phi = PartialEdgeColoring::new(g.clone(), 0, vec![None; g.edge_count()])
                .expect("at most one uncoloured edge");
            Colorable::Yes(phi)
        } else {
            Colorable::No
        };
        return Ok((out, 0));
    }
    let mut search = Search::new(g.clone(), k as u8, order, true, cfg.node_budget);
    let found = search.run().map_err(|_| SolverError::BudgetExceeded {
        budget: cfg.node_budget,
    })?;
    let nodes = search.nodes;
    if !found {
        return Ok((Colorable::No, nodes));
    }
    let phi = PartialEdgeColoring::new(g.clone(), k as u8, search.assignment(g.edge_count()))
        .expect("search output is well formed");
    debug_assert!(phi.validate());
    Ok((Colorable::Yes(phi), nodes))
}

/// χ′(G) with a witness colouring. Tries Δ colours, then Δ+1.
pub fn chromatic_index(g: &Arc<SimpleGraph>, cfg: &SolverConfig) -> Result<ClassVerdict, SolverError> {
    if g.edge_count() == 0 {
        return Err(SolverError::NoEdges);
    }
    let delta = g.max_degree();
    let overfull = is_overfull(g);
    let core_acyclic = g.is_core_acyclic();
    let mut nodes = 0;
    if !overfull {
        let (res, n) = find_coloring(g, delta, None, cfg)?;
        nodes += n;
        if let Colorable::Yes(witness) = res {
            return Ok(ClassVerdict {
                chi_prime: delta,
                class: EdgeClass::One,
                witness,
                nodes,
                overfull_shortcut: false,
                core_acyclic,
            });
        }
    }
    let (res, n) = find_coloring(g, delta + 1, None, cfg)?;
    nodes += n;
    match res {
        Colorable::Yes(witness) => Ok(ClassVerdict {
            chi_prime: delta + 1,
            class: EdgeClass::Two,
            witness,
            nodes,
            overfull_shortcut: overfull,
            core_acyclic,
        }),
        Colorable::No => unreachable!("every simple graph is (Δ+1)-edge-colourable"),
    }
}

/// χ′(G − e) < χ′(G), given the class of `g`.
pub fn is_critical_edge_given(
    g: &Arc<SimpleGraph>,
    class: EdgeClass,
    e: EdgeId,
    cfg: &SolverConfig,
) -> Result<bool, SolverError> {
    let delta = g.max_degree();
    // χ′(G) is Δ or Δ+1; the edge is critical iff G − e fits in one colour less
    let target = match class {
        EdgeClass::Two => delta,
        EdgeClass::One => delta - 1,
    };
    let (res, _) = find_coloring(g, target, Some(e), cfg)?;
    Ok(matches!(res, Colorable::Yes(_)))
}

pub fn is_critical_edge(g: &Arc<SimpleGraph>, e: EdgeId, cfg: &SolverConfig) -> Result<bool, SolverError> {
    if e >= g.edge_count() {
        return Err(SolverError::BadEdge(e));
    }
    let class = chromatic_index(g, cfg)?.class;
    is_critical_edge_given(g, class, e, cfg)
}

#[derive(Clone, Debug, Serialize)]
pub struct CriticalityReport {
    pub class: EdgeClass,
    pub chi_prime: usize,
    pub delta: usize,
    /// Per edge id; `None` when the scan stopped early.
    pub critical_edges: Vec<Option<bool>>,
    pub delta_critical: bool,
    pub note: Option<String>,
}

impl CriticalityReport {
    pub fn critical_edge_ids(&self) -> Vec<EdgeId> {
        self.critical_edges
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == Some(true))
            .map(|(e, _)| e)
            .collect()
    }
}

/// Class, per-edge criticality and Δ-criticality. With `stop_early` the
/// edge scan ends at the first non-critical edge.
pub fn criticality(
    g: &Arc<SimpleGraph>,
    cfg: &SolverConfig,
    stop_early: bool,
) -> Result<CriticalityReport, SolverError> {
    let verdict = chromatic_index(g, cfg)?;
    let mut critical_edges = vec![None; g.edge_count()];
    let mut all = true;
    for (e, slot) in critical_edges.iter_mut().enumerate() {
        let c = is_critical_edge_given(g, verdict.class, e, cfg)?;
        *slot = Some(c);
        if !c {
            all = false;
            if stop_early {
                break;
            }
        }
    }
    let isolated = g.isolated_vertices();
    let note = (!isolated.is_empty()).then(|| {
        format!(
            "isolated vertices {isolated:?}: deleting one leaves a proper subgraph with the same chromatic index"
        )
    });
    Ok(CriticalityReport {
        class: verdict.class,
        chi_prime: verdict.chi_prime,
        delta: g.max_degree(),
        critical_edges,
        delta_critical: verdict.class == EdgeClass::Two && all && isolated.is_empty(),
        note,
    })
}

/// Class two, every edge critical and no isolated vertex.
pub fn is_delta_critical(g: &Arc<SimpleGraph>, cfg: &SolverConfig) -> Result<bool, SolverError> {
    Ok(criticality(g, cfg, true)?.delta_critical)
}


#[cfg(test)]
mod tests;
