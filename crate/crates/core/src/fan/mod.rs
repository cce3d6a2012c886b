//! Multifans at the uncoloured edge, their typical form, Kierstead paths,
//! maximum-fan search and the elementary/linkage verifiers.

mod instance;
mod kierstead;
mod search;
mod stability;
mod typical;
mod verify;

pub use instance::{EdgeInstance, InstanceError};
pub use kierstead::{grow_kierstead_path, kierstead_paths4, verify_kp_elementary, KiersteadPath};
pub use search::{search_maximum_multifan, FanStatus, MaxFanResult, SearchMode};
pub use stability::{stability_class, spans_multifan, Stability};
pub use typical::{inducing_map, normalize_typical, typical_form, InducedColor, InducingMap, TypicalForm};
pub use verify::{
    verify_fan_elementary, verify_fan_linkage, verify_stable_swaps, verify_weak_stable_swaps,
};

use crate::coloring::{Color, ColorSet, ColoringError, PartialEdgeColoring};
use crate::graph::{EdgeId, SimpleGraph, Vertex};
use crate::solver::SolverError;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FanError {
    #[error("the colouring has no uncoloured edge")]
    NoUncoloredEdge,
    #[error("vertex {0} is not an end of the uncoloured edge")]
    NotEndpoint(Vertex),
    #[error("fan vertices are not elementary: {0} and {1} both miss colour {2}")]
    NotElementary(Vertex, Vertex, Color),
    #[error("s1 misses {0} colours, expected 2")]
    BadMissingCount(usize),
    #[error("center {0} is not light")]
    NotLight(Vertex),
    #[error("fan vertex {0} has degree {1}, expected {2}")]
    BadDegree(Vertex, usize, usize),
    #[error("G - e is not colourable with the palette")]
    NotColorable,
    #[error("colourings do not share a graph and uncoloured edge")]
    Mismatch,
    #[error("invalid fan: {0}")]
    Invalid(String),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// Bookkeeping around a light center: its two Δ-neighbours and the
/// (Δ−1)-neighbours, `s1` listed first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanContext {
    pub q: usize,
    pub u: Vec<Vertex>,
    pub s: Vec<Vertex>,
    pub light: bool,
}

impl FanContext {
    pub fn of(g: &SimpleGraph, r: Vertex, s1: Vertex) -> Self {
        let delta = g.max_degree();
        let u = g.neighbors_of_degree(r, delta);
        let mut s = vec![s1];
        s.extend(
            g.neighbors_of_degree(r, delta.saturating_sub(1))
                .into_iter()
                .filter(|&v| v != s1),
        );
        let light = g.light_vertices().contains(&r);
        FanContext {
            q: g.degree(r).saturating_sub(2),
            u,
            s,
            light,
        }
    }

    /// Two Δ-neighbours and every other neighbour of degree Δ−1.
    pub fn is_standard(&self, g: &SimpleGraph, r: Vertex) -> bool {
        self.light && self.u.len() == 2 && self.s.len() == self.q && self.u.len() + self.s.len() == g.degree(r)
    }
}

/// A multifan `(r, rs1, s1, rs2, s2, ..., rsp, sp)` together with the
/// colours it was built from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Multifan {
    pub center: Vertex,
    pub uncolored_edge: EdgeId,
    pub sequence: Vec<Vertex>,
    /// `φ(rs_i)`; `None` for `s1`.
    pub edge_colors: Vec<Option<Color>>,
    pub missing: Vec<ColorSet>,
    pub center_missing: ColorSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub typical: Option<TypicalForm>,
}

impl Multifan {
    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// `|V(F)|`.
    pub fn size(&self) -> usize {
        self.sequence.len() + 1
    }

    pub fn s1(&self) -> Vertex {
        self.sequence[0]
    }

    /// `V(F)` with the center first.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut v = Vec::with_capacity(self.size());
        v.push(self.center);
        v.extend_from_slice(&self.sequence);
        v
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v == self.center || self.sequence.contains(&v)
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.sequence.iter().position(|&s| s == v)
    }

    /// `φ̄(V(F))` as recorded.
    pub fn missing_union(&self) -> ColorSet {
        self.missing
            .iter()
            .fold(self.center_missing, |acc, m| acc.union(*m))
    }

    /// Edge ids of `E(F)`, the uncoloured edge first.
    pub fn edges(&self, g: &SimpleGraph) -> Vec<EdgeId> {
        self.sequence
            .iter()
            .map(|&s| g.edge_between(self.center, s).expect("fan edge"))
            .collect()
    }

    /// Re-reads colours and missing sets from `phi` for the same vertices.
    pub fn refreshed(&self, phi: &PartialEdgeColoring) -> Multifan {
        let g = phi.graph();
        Multifan {
            center: self.center,
            uncolored_edge: self.uncolored_edge,
            sequence: self.sequence.clone(),
            edge_colors: self
                .sequence
                .iter()
                .map(|&s| phi.color(g.edge_between(self.center, s).expect("fan edge")))
                .collect(),
            missing: self.sequence.iter().map(|&s| phi.missing(s)).collect(),
            center_missing: phi.missing(self.center),
            typical: None,
        }
    }

    /// Checks (F1), distinctness, adjacency and the non-Δ rule against
    /// `phi`, and that the recorded colours are current.
    pub fn validate(&self, phi: &PartialEdgeColoring) -> Result<(), FanError> {
        let g = phi.graph();
        let bad = |m: String| Err(FanError::Invalid(m));
        let Some(e) = phi.uncolored() else {
            return Err(FanError::NoUncoloredEdge);
        };
        if e != self.uncolored_edge || self.sequence.is_empty() {
            return bad("uncoloured edge mismatch".into());
        }
        let r = self.center;
        if g.edge_between(r, self.sequence[0]) != Some(e) {
            return bad("s1 is not across the uncoloured edge".into());
        }
        let delta = g.max_degree();
        let mut seen = ColorSet::EMPTY;
        for (i, &s) in self.sequence.iter().enumerate() {
            if self.sequence[..i].contains(&s) || s == r {
                return bad(format!("vertex {s} repeated"));
            }
            if !g.has_edge(r, s) {
                return bad(format!("{s} is not a neighbour of the center"));
            }
            // s1 is fixed by the uncoloured edge and may itself be a Δ-vertex
            if i > 0 && g.degree(s) >= delta {
                return bad(format!("{s} is a Δ-vertex"));
            }
            if i > 0 {
                let c = phi.color(g.edge_between(r, s).unwrap());
                match c {
                    Some(c) if seen.contains(c) => {}
                    _ => return bad(format!("edge to {s} violates F1")),
                }
            }
            seen = seen.union(phi.missing(s));
        }
        if *self != self.refreshed(phi).with_typical(self.typical.clone()) {
            return bad("recorded colours are stale".into());
        }
        Ok(())
    }

    fn with_typical(mut self, t: Option<TypicalForm>) -> Self {
        self.typical = t;
        self
    }

    fn from_sequence(phi: &PartialEdgeColoring, r: Vertex, e: EdgeId, sequence: Vec<Vertex>) -> Self {
        let base = Multifan {
            center: r,
            uncolored_edge: e,
            sequence,
            edge_colors: Vec::new(),
            missing: Vec::new(),
            center_missing: ColorSet::EMPTY,
            typical: None,
        };
        base.refreshed(phi)
    }
}

/// The maximal multifan at `r` grown greedily: at each step the lowest
/// colour in `φ̄(s1) ∪ ... ∪ φ̄(s_i)` whose edge at `r` leads to a new
/// non-Δ vertex. The vertex set is the closure under (F1), so it does not
/// depend on the order.
pub fn grow_multifan(phi: &PartialEdgeColoring, r: Vertex) -> Result<Multifan, FanError> {
    let g = phi.graph();
    let e = phi.uncolored().ok_or(FanError::NoUncoloredEdge)?;
    let (a, b) = g.edge(e);
    let s1 = if r == a {
        b
    } else if r == b {
        a
    } else {
        return Err(FanError::NotEndpoint(r));
    };
    Ok(grow_within(phi, r, e, s1, |_| true))
}

/// Greedy closure restricted to vertices accepted by `allow`.
pub(crate) fn grow_within(
    phi: &PartialEdgeColoring,
    r: Vertex,
    e: EdgeId,
    s1: Vertex,
    allow: impl Fn(Vertex) -> bool,
) -> Multifan {
    let g = phi.graph();
    let delta = g.max_degree();
    let mut seq = vec![s1];
    let mut avail = phi.missing(s1);
    loop {
        let next = avail.iter().find_map(|c| {
            let y = phi.neighbor_via(r, c)?;
            (!seq.contains(&y) && g.degree(y) < delta && allow(y)).then_some(y)
        });
        match next {
            Some(y) => {
                seq.push(y);
                avail = avail.union(phi.missing(y));
            }
            None => break,
        }
    }
    Multifan::from_sequence(phi, r, e, seq)
}
