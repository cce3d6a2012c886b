use super::{grow_multifan, FanError, Multifan};
use crate::coloring::{ColorSet, PartialEdgeColoring};
use crate::graph::{EdgeId, SimpleGraph, Vertex};
use crate::solver::{find_coloring, ColoringEnumerator, Colorable, SolverConfig};
use serde::Serialize;
use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    /// Every colouring of `G − e`, up to relabelling.
    Exhaustive,
    /// Colourings reachable by single Kempe swaps touching fan colours.
    Reachability,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FanStatus {
    /// Proven maximum over all colourings of `G − e`.
    #[serde(rename = "EXACT")]
    Exact,
    #[serde(rename = "LOWER-BOUND")]
    LowerBound,
}

#[derive(Clone, Debug, Serialize)]
pub struct MaxFanResult {
    pub coloring: PartialEdgeColoring,
    pub fan: Multifan,
    pub status: FanStatus,
    /// Colourings looked at.
    pub examined: u64,
    /// `2 +` the number of non-Δ neighbours of `r` other than `s1`.
    pub upper_bound: usize,
}

fn upper_bound(g: &SimpleGraph, r: Vertex, s1: Vertex) -> usize {
    let delta = g.max_degree();
    2 + g
        .neighbors(r)
        .iter()
        .filter(|&&y| y != s1 && g.degree(y) < delta)
        .count()
}

/// Largest multifan at `r` for the uncoloured edge `e` over Δ-colourings of
/// `G − e`.
///
/// `budget` caps the colourings examined in either mode; a budget of zero
/// returns the fan of the starting colouring. The status is EXACT only
/// when every colouring was seen or the fan reached the degree bound.
pub fn search_maximum_multifan(
    g: &Arc<SimpleGraph>,
    e: EdgeId,
    r: Vertex,
    start: Option<&PartialEdgeColoring>,
    mode: SearchMode,
    budget: u64,
) -> Result<MaxFanResult, FanError> {
    g.check_edge(e).map_err(|x| FanError::Invalid(x.to_string()))?;
    let (a, b) = g.edge(e);
    if r != a && r != b {
        return Err(FanError::NotEndpoint(r));
    }
    let s1 = if r == a { b } else { a };
    let k = g.max_degree() as u8;
    let ub = upper_bound(g, r, s1);
    let initial = match start {
        Some(phi) => {
            if phi.uncolored() != Some(e) || phi.k() != k || !phi.validate() {
                return Err(FanError::Invalid("start colouring does not fit the edge".into()));
            }
            phi.clone()
        }
        None => match find_coloring(g, k as usize, Some(e), &SolverConfig::default())?.0 {
            Colorable::Yes(phi) => phi,
            Colorable::No => return Err(FanError::NotColorable),
        },
    };
    let fan = grow_multifan(&initial, r)?;
    let mut best = MaxFanResult {
        coloring: initial,
        fan,
        status: FanStatus::LowerBound,
        examined: 1,
        upper_bound: ub,
    };
    if budget == 0 {
        return Ok(best);
    }
    if best.fan.size() == ub {
        best.status = FanStatus::Exact;
        return Ok(best);
    }
    match mode {
        SearchMode::Exhaustive => exhaustive(g, e, r, k, budget, best),
        SearchMode::Reachability => reachability(r, budget, best),
    }
}

fn exhaustive(
    g: &Arc<SimpleGraph>,
    e: EdgeId,
    r: Vertex,
    k: u8,
    budget: u64,
    mut best: MaxFanResult,
) -> Result<MaxFanResult, FanError> {
    let limit = usize::try_from(budget).unwrap_or(usize::MAX);
    let mut it = ColoringEnumerator::new(g.clone(), Some(e), k, limit, true);
    let mut examined = 0;
    for phi in it.by_ref() {
        examined += 1;
        let fan = grow_multifan(&phi, r)?;
        if fan.size() > best.fan.size() {
            best.coloring = phi;
            best.fan = fan;
            if best.fan.size() == best.upper_bound {
                best.examined += examined;
                best.status = FanStatus::Exact;
                return Ok(best);
            }
        }
    }
    best.examined += examined;
    if it.exhausted() {
        best.status = FanStatus::Exact;
    }
    Ok(best)
}

fn reachability(r: Vertex, budget: u64, mut best: MaxFanResult) -> Result<MaxFanResult, FanError> {
    let start = best.coloring.clone();
    let k = start.k();
    let n = start.graph().n();
    let mut seen = HashSet::new();
    seen.insert(start.assignment_hash());
    let mut queue = VecDeque::from([start]);
    let mut examined = 0u64;
    while let Some(phi) = queue.pop_front() {
        let fan = grow_multifan(&phi, r)?;
        examined += 1;
        if fan.size() > best.fan.size() {
            best.fan = fan.clone();
            best.coloring = phi.clone();
            if best.fan.size() == best.upper_bound {
                best.status = FanStatus::Exact;
                break;
            }
        }
        if examined >= budget {
            break;
        }
        let fan_colors: ColorSet = fan
            .missing_union()
            .union(fan.edge_colors.iter().flatten().copied().collect());
        for c1 in fan_colors.iter() {
            for c2 in 1..=k {
                if c2 == c1 || (fan_colors.contains(c2) && c2 < c1) {
                    continue;
                }
                let mut covered = vec![false; n];
                for v in 0..n {
                    if covered[v] {
                        continue;
                    }
                    let chain = phi.chain_at(v, c1, c2)?;
                    for &w in &chain.vertices {
                        covered[w] = true;
                    }
                    if chain.is_trivial() {
                        continue;
                    }
                    let next = phi.kempe_swap(&chain)?;
                    if seen.insert(next.assignment_hash()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    best.examined = examined;
    Ok(best)
}
