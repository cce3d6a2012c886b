use super::FanContext;
use crate::graph::{EdgeId, GraphError, SimpleGraph, Vertex};
use crate::solver::{chromatic_index, is_critical_edge_given, EdgeClass, SolverConfig, SolverError};
use crate::verdict::Verdict;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("vertex {0} is not an end of edge {1}")]
    NotEndpoint(Vertex, EdgeId),
}

/// A graph, an edge `rs1` and a chosen center `r`, with the class and
/// criticality facts the lemma gates need.
#[derive(Clone, Debug)]
pub struct EdgeInstance {
    pub graph: Arc<SimpleGraph>,
    pub edge: EdgeId,
    pub center: Vertex,
    pub s1: Vertex,
    pub delta: usize,
    pub class_two: bool,
    pub critical: bool,
}

impl EdgeInstance {
    /// Decides class and criticality with the exact solver.
    pub fn new(graph: Arc<SimpleGraph>, edge: EdgeId, center: Vertex, cfg: &SolverConfig) -> Result<Self, InstanceError> {
        graph.check_edge(edge)?;
        let class = chromatic_index(&graph, cfg)?.class;
        let critical = is_critical_edge_given(&graph, class, edge, cfg)?;
        Self::from_known(graph, edge, center, class == EdgeClass::Two, critical)
    }

    /// Trusts facts established elsewhere, e.g. by a criticality report.
    pub fn from_known(
        graph: Arc<SimpleGraph>,
        edge: EdgeId,
        center: Vertex,
        class_two: bool,
        critical: bool,
    ) -> Result<Self, InstanceError> {
        graph.check_edge(edge)?;
        let (a, b) = graph.edge(edge);
        let s1 = if center == a {
            b
        } else if center == b {
            a
        } else {
            return Err(InstanceError::NotEndpoint(center, edge));
        };
        Ok(EdgeInstance {
            delta: graph.max_degree(),
            graph,
            edge,
            center,
            s1,
            class_two,
            critical,
        })
    }

    /// `None` when the graph is class two and the edge critical, otherwise
    /// the INAPPLICABLE verdict to report.
    pub fn critical_gate(&self) -> Option<Verdict> {
        if !self.class_two {
            Some(Verdict::inapplicable("graph is class one"))
        } else if !self.critical {
            Some(Verdict::inapplicable("edge is not critical"))
        } else {
            None
        }
    }

    pub fn context(&self) -> FanContext {
        FanContext::of(&self.graph, self.center, self.s1)
    }

    pub fn center_is_light(&self) -> bool {
        self.graph.light_vertices().contains(&self.center)
    }

    /// Light center whose non-`s1` neighbours are two Δ-vertices and
    /// (Δ−1)-vertices.
    pub fn standard_gate(&self) -> Option<Verdict> {
        if let Some(v) = self.critical_gate() {
            return Some(v);
        }
        if !self.context().is_standard(&self.graph, self.center) {
            return Some(Verdict::inapplicable(
                "center is not light with two Δ-neighbours and the rest of degree Δ−1",
            ));
        }
        None
    }
}
