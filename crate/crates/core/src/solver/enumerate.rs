use super::search::{edge_order, BudgetExceeded, Search};
use super::{EdgeOrder, SolverError};
use crate::coloring::PartialEdgeColoring;
use crate::graph::{EdgeId, SimpleGraph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use std::sync::Arc;

/// Streams every proper `k`-colouring of `G − e` in lexicographic order of
/// the edge-id sequence, stopping after `limit` items.
///
/// With `canonical` set, only colourings whose colours first appear in
/// increasing order along the edge ids are produced (one per relabelling
/// class).
pub struct ColoringEnumerator {
    graph: Arc<SimpleGraph>,
    skip: Option<EdgeId>,
    k: u8,
    search: Search,
    started: bool,
    done: bool,
    yielded: usize,
    limit: usize,
    truncated: bool,
    budget_hit: bool,
}

impl ColoringEnumerator {
    pub fn new(graph: Arc<SimpleGraph>, skip: Option<EdgeId>, k: u8, limit: usize, canonical: bool) -> Self {
        Self::with_budget(graph, skip, k, limit, canonical, u64::MAX)
    }

    pub fn with_budget(
        graph: Arc<SimpleGraph>,
        skip: Option<EdgeId>,
        k: u8,
        limit: usize,
        canonical: bool,
        node_budget: u64,
    ) -> Self {
        let order = edge_order(&graph, skip, EdgeOrder::Index);
        ColoringEnumerator {
            search: Search::new(graph.clone(), k, order, canonical, node_budget),
            graph,
            skip,
            k,
            started: false,
            done: false,
            yielded: 0,
            limit,
            truncated: false,
            budget_hit: false,
        }
    }

    /// True when the stream stopped at `limit` with colourings left over.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// True when the node budget ended the stream early.
    pub fn budget_hit(&self) -> bool {
        self.budget_hit
    }

    pub fn yielded(&self) -> usize {
        self.yielded
    }

    /// True once the stream is known to be complete.
    pub fn exhausted(&self) -> bool {
        self.done && !self.truncated && !self.budget_hit
    }
}

impl Iterator for ColoringEnumerator {
    type Item = PartialEdgeColoring;

    fn next(&mut self) -> Option<PartialEdgeColoring> {
        if self.done {
            return None;
        }
        let resume = self.started;
        self.started = true;
        match self.search.next_solution(resume) {
            Err(BudgetExceeded) => {
                self.done = true;
                self.budget_hit = true;
                None
            }
            Ok(false) => {
                self.done = true;
                None
            }
            Ok(true) => {
                if self.yielded == self.limit {
                    self.done = true;
                    self.truncated = true;
                    return None;
                }
                self.yielded += 1;
                let mut assign = self.search.assignment(self.graph.edge_count());
                if let Some(e) = self.skip {
                    assign[e] = None;
                }
                Some(
                    PartialEdgeColoring::new(self.graph.clone(), self.k, assign)
                        .expect("enumerated assignment is well formed"),
                )
            }
        }
    }
}

/// Number of proper `k`-colourings of `G − e`, or `None` past `limit`.
pub fn count_colorings(graph: &Arc<SimpleGraph>, skip: Option<EdgeId>, k: u8, limit: usize) -> Option<usize> {
    let mut it = ColoringEnumerator::new(graph.clone(), skip, k, limit, false);
    let n = it.by_ref().count();
    (!it.truncated()).then_some(n)
}

pub struct Sample {
    pub colorings: Vec<PartialEdgeColoring>,
    /// Every colouring of `G − e` is in the sample.
    pub exhaustive: bool,
}

const PROBE_BUDGET: u64 = 200_000;

/// Up to `count` distinct colourings of `G − e`: all of them when there are
/// at most `count`, otherwise seeded randomised depth-first probes, topped
/// up by a seeded walk of random Kempe swaps.
pub fn sample_colorings(
    graph: &Arc<SimpleGraph>,
    skip: Option<EdgeId>,
    k: u8,
    count: usize,
    seed: u64,
    node_budget: u64,
) -> Result<Sample, SolverError> {
    let mut it = ColoringEnumerator::with_budget(graph.clone(), skip, k, count, false, node_budget);
    let first: Vec<_> = it.by_ref().collect();
    if !it.truncated() && !it.budget_hit() {
        return Ok(Sample {
            colorings: first,
            exhaustive: true,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut colorings = Vec::with_capacity(count);
    let order = edge_order(graph, skip, EdgeOrder::DegreeSum);
    for _ in 0..count * 4 {
        if colorings.len() == count {
            break;
        }
        let mut s = Search::new(graph.clone(), k, order.clone(), false, PROBE_BUDGET.min(node_budget)).with_rng(rng);
        let found = s.run();
        let assign = s.assignment(graph.edge_count());
        rng = s.into_rng().expect("rng attached");
        match found {
            Ok(true) => {
                if seen.insert(assign.clone()) {
                    colorings.push(
                        PartialEdgeColoring::new(graph.clone(), k, assign)
                            .expect("search output is well formed"),
                    );
                }
            }
            Ok(false) => break,
            Err(BudgetExceeded) => {}
        }
    }
    for phi in first {
        if colorings.len() == count {
            break;
        }
        if seen.insert(phi.assignment().to_vec()) {
            colorings.push(phi);
        }
    }
    if colorings.is_empty() {
        let cfg = super::SolverConfig {
            node_budget,
            order: EdgeOrder::DegreeSum,
        };
        match super::find_coloring(graph, k as usize, skip, &cfg)?.0 {
            super::Colorable::Yes(phi) => {
                seen.insert(phi.assignment().to_vec());
                colorings.push(phi);
            }
            super::Colorable::No => {
                return Ok(Sample {
                    colorings,
                    exhaustive: true,
                })
            }
        }
    }
    kempe_walk(&mut colorings, &mut seen, count, &mut rng);
    Ok(Sample {
        colorings,
        exhaustive: false,
    })
}

/// Extends `colorings` with distinct neighbours under random Kempe swaps.
fn kempe_walk(
    colorings: &mut Vec<PartialEdgeColoring>,
    seen: &mut HashSet<Vec<Option<crate::coloring::Color>>>,
    count: usize,
    rng: &mut ChaCha8Rng,
) {
    use rand::Rng;
    let Some(mut cur) = colorings.last().cloned() else { return };
    let n = cur.graph().n();
    let k = cur.k();
    if k < 2 || n == 0 {
        return;
    }
    for _ in 0..count * 50 {
        if colorings.len() >= count {
            break;
        }
        let v = rng.gen_range(0..n);
        let a = rng.gen_range(1..=k);
        let b = rng.gen_range(1..=k);
        if a == b {
            continue;
        }
        let Ok(next) = cur.swap_at(v, a, b) else { continue };
        cur = next;
        if seen.insert(cur.assignment().to_vec()) {
            colorings.push(cur.clone());
        }
    }
}
