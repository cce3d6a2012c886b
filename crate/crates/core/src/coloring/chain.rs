use super::Color;
use crate::graph::{EdgeId, Vertex};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainKind {
    Path,
    Cycle,
}

/// A component of the subgraph spanned by two colour classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Chain {
    /// The colour pair, smaller first.
    pub colors: (Color, Color),
    pub kind: ChainKind,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
}

impl Chain {
    pub fn is_path(&self) -> bool {
        self.kind == ChainKind::Path
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    /// Both ends of a path chain (equal for a trivial path).
    pub fn endpoints(&self) -> Option<(Vertex, Vertex)> {
        match self.kind {
            ChainKind::Path => Some((self.vertices[0], *self.vertices.last().unwrap())),
            ChainKind::Cycle => None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertices of a path listed from end `x`.
    pub fn from_end(&self, x: Vertex) -> Option<Vec<Vertex>> {
        let (a, b) = self.endpoints()?;
        if a == x {
            Some(self.vertices.clone())
        } else if b == x {
            Some(self.vertices.iter().rev().copied().collect())
        } else {
            None
        }
    }

    /// Whether the path, read from its end `x`, reaches `u` strictly before
    /// `v`. `None` when `x` is not an end or `u`/`v` are not on the path.
    pub fn meets_before(&self, x: Vertex, u: Vertex, v: Vertex) -> Option<bool> {
        let order = self.from_end(x)?;
        let pu = order.iter().position(|&w| w == u)?;
        let pv = order.iter().position(|&w| w == v)?;
        Some(pu < pv)
    }
}
