use crate::coloring::{Color, ColorSet};
use crate::graph::{EdgeId, SimpleGraph};
use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// Static edge orders for the backtracking search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EdgeOrder {
    /// Descending `d(u) + d(v)`, ties by edge id.
    #[default]
    DegreeSum,
    /// Plain edge-id order.
    Index,
}

pub(crate) fn edge_order(g: &SimpleGraph, skip: Option<EdgeId>, order: EdgeOrder) -> Vec<EdgeId> {
    let mut ids: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| Some(e) != skip).collect();
    if order == EdgeOrder::DegreeSum {
        ids.sort_by_key(|&e| {
            let (a, b) = g.edge(e);
            (std::cmp::Reverse(g.degree(a) + g.degree(b)), e)
        });
    }
    ids
}

pub(crate) struct BudgetExceeded;

/// Depth-first search for a proper `k`-colouring of the edges in `order`.
pub(crate) struct Search {
    g: Arc<SimpleGraph>,
    full: u64,
    order: Vec<EdgeId>,
    later: Vec<Vec<usize>>,
    used: Vec<u64>,
    colors: Vec<Color>,
    prefix_max: Vec<Color>,
    symmetric: bool,
    pub nodes: u64,
    budget: u64,
    rng: Option<ChaCha8Rng>,
}

impl Search {
    pub fn new(g: Arc<SimpleGraph>, k: u8, order: Vec<EdgeId>, symmetric: bool, budget: u64) -> Self {
        let m = order.len();
        let n = g.n();
        let mut at_vertex: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
        for (i, &e) in order.iter().enumerate() {
            let (a, b) = g.edge(e);
            at_vertex[a].push(i);
            at_vertex[b].push(i);
        }
        let later = order
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                let (a, b) = g.edge(e);
                let mut js: Vec<usize> = at_vertex[a]
                    .iter()
                    .chain(&at_vertex[b])
                    .copied()
                    .filter(|&j| j > i)
                    .collect();
                js.sort_unstable();
                js.dedup();
                js
            })
            .collect();
        Search {
            g,
            full: ColorSet::full(k).bits(),
            order,
            later,
            used: vec![0; n],
            colors: vec![0; m],
            prefix_max: vec![0; m + 1],
            symmetric,
            nodes: 0,
            budget,
            rng: None,
        }
    }

    pub fn with_rng(mut self, rng: ChaCha8Rng) -> Self {
        self.rng = Some(rng);
        self
    }

    pub fn into_rng(self) -> Option<ChaCha8Rng> {
        self.rng
    }

    fn free(&self, i: usize) -> u64 {
        let (a, b) = self.g.edge(self.order[i]);
        let mut free = !(self.used[a] | self.used[b]) & self.full;
        if self.symmetric {
            free &= ColorSet::full(self.prefix_max[i] + 1).bits();
        }
        free
    }

    fn place(&mut self, i: usize, c: Color) {
        let (a, b) = self.g.edge(self.order[i]);
        let bit = 1u64 << (c - 1);
        self.used[a] |= bit;
        self.used[b] |= bit;
        self.colors[i] = c;
        self.prefix_max[i + 1] = self.prefix_max[i].max(c);
    }

    fn unplace(&mut self, i: usize) {
        let (a, b) = self.g.edge(self.order[i]);
        let bit = !(1u64 << (self.colors[i] - 1));
        self.used[a] &= bit;
        self.used[b] &= bit;
        self.colors[i] = 0;
    }

    fn forward_ok(&self, i: usize) -> bool {
        self.later[i].iter().all(|&j| {
            let (a, b) = self.g.edge(self.order[j]);
            !(self.used[a] | self.used[b]) & self.full != 0
        })
    }

    fn candidates(&mut self, i: usize) -> Vec<Color> {
        let mut cs: Vec<Color> = ColorSet::from_bits(self.free(i)).iter().collect();
        if let Some(rng) = self.rng.as_mut() {
            cs.shuffle(rng);
        }
        cs
    }

    /// Finds the first completion.
    pub fn run(&mut self) -> Result<bool, BudgetExceeded> {
        self.dfs(0)
    }

    fn dfs(&mut self, i: usize) -> Result<bool, BudgetExceeded> {
        if i == self.order.len() {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(BudgetExceeded);
        }
        for c in self.candidates(i) {
            self.place(i, c);
            if self.forward_ok(i) && self.dfs(i + 1)? {
                return Ok(true);
            }
            self.unplace(i);
        }
        Ok(false)
    }

    /// Resumable enumeration: advances to the next complete assignment in
    /// lexicographic colour order. `resume` is false on the first call.
    pub fn next_solution(&mut self, resume: bool) -> Result<bool, BudgetExceeded> {
        let m = self.order.len();
        if m == 0 {
            return Ok(!resume);
        }
        let (mut i, mut from) = if resume {
            let c = self.colors[m - 1];
            self.unplace(m - 1);
            (m - 1, c + 1)
        } else {
            (0, 1)
        };
        loop {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(BudgetExceeded);
            }
            let free = self.free(i) & !ColorSet::full(from - 1).bits();
            match ColorSet::from_bits(free).first() {
                Some(c) => {
                    self.place(i, c);
                    if i + 1 == m {
                        return Ok(true);
                    }
                    if !self.forward_ok(i) {
                        self.unplace(i);
                        from = c + 1;
                        continue;
                    }
                    i += 1;
                    from = 1;
                }
                None => {
                    if i == 0 {
                        return Ok(false);
                    }
                    i -= 1;
                    from = self.colors[i] + 1;
                    self.unplace(i);
                }
            }
        }
    }

    /// Assignment indexed by edge id; edges outside the order stay `None`.
    pub fn assignment(&self, m: usize) -> Vec<Option<Color>> {
        let mut out = vec![None; m];
        for (i, &e) in self.order.iter().enumerate() {
            out[e] = (self.colors[i] != 0).then_some(self.colors[i]);
        }
        out
    }
}
