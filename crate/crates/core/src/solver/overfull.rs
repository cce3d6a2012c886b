use crate::coloring::{Color, PartialEdgeColoring};
use crate::graph::SimpleGraph;
use serde::Serialize;
use thiserror::Error;

/// `|E| > Δ·⌊n/2⌋`.
pub fn is_overfull(g: &SimpleGraph) -> bool {
    g.edge_count() > g.max_degree() * (g.n() / 2)
}

/// `|E| = Δ·⌊n/2⌋ + 1`.
pub fn is_just_overfull(g: &SimpleGraph) -> bool {
    g.edge_count() == g.max_degree() * (g.n() / 2) + 1
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("order {0} is even")]
pub struct OddOrderRequired(pub usize);

/// `(n−1)Δ + 2 − 2|E|` for odd `n`; non-positive exactly when overfull.
pub fn overfull_deficiency(g: &SimpleGraph) -> Result<i64, OddOrderRequired> {
    let n = g.n();
    if n.is_multiple_of(2) {
        return Err(OddOrderRequired(n));
    }
    Ok((n as i64 - 1) * g.max_degree() as i64 + 2 - 2 * g.edge_count() as i64)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParityError {
    #[error("colouring has an uncoloured edge")]
    Incomplete,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    /// `counts[c-1]` vertices miss colour `c`.
    pub counts: Vec<usize>,
    /// Colours whose count has the wrong parity.
    pub violations: Vec<Color>,
}

/// For a complete colouring, each colour is missing at a number of vertices
/// congruent to `n` mod 2.
pub fn parity_check(phi: &PartialEdgeColoring) -> Result<ParityReport, ParityError> {
    if !phi.is_complete() {
        return Err(ParityError::Incomplete);
    }
    let n = phi.graph().n();
    let counts = phi.missing_counts();
    let violations = counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c % 2 != n % 2)
        .map(|(i, _)| i as Color + 1)
        .collect();
    Ok(ParityReport { counts, violations })
}
