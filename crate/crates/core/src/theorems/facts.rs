use crate::graph::{EdgeId, SimpleGraph, Vertex};
use crate::solver::{
    chromatic_index, criticality, is_just_overfull, is_overfull, EdgeClass, SolverConfig, SolverError,
};
use serde::Serialize;
use std::sync::Arc;

/// Solver facts about one graph that the hypothesis gates read.
#[derive(Clone, Debug, Serialize)]
pub struct GraphFacts {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub connected: bool,
    pub chi_prime: usize,
    pub class: EdgeClass,
    pub overfull: bool,
    pub just_overfull: bool,
    /// Minimum degree of the Δ-core.
    pub core_min_degree: usize,
    /// Per edge; filled only for class-two graphs.
    #[serde(skip)]
    pub critical: Vec<bool>,
    pub delta_critical: bool,
    #[serde(skip)]
    pub witness: Option<crate::coloring::PartialEdgeColoring>,
}

impl GraphFacts {
    /// Edgeless graphs count as class one with χ′ = 0.
    pub fn compute(g: &Arc<SimpleGraph>, cfg: &SolverConfig) -> Result<Self, SolverError> {
        if g.edge_count() == 0 {
            return Ok(GraphFacts {
                n: g.n(),
                m: 0,
                delta: 0,
                connected: g.is_connected(),
                chi_prime: 0,
                class: EdgeClass::One,
                overfull: false,
                just_overfull: false,
                core_min_degree: 0,
                critical: Vec::new(),
                delta_critical: false,
                witness: None,
            });
        }
        let cv = chromatic_index(g, cfg)?;
        let (critical, delta_critical) = if cv.class == EdgeClass::Two {
            let rep = criticality(g, cfg, false)?;
            let c: Vec<bool> = rep.critical_edges.iter().map(|c| c.unwrap_or(false)).collect();
            (c, rep.delta_critical)
        } else {
            (vec![false; g.edge_count()], false)
        };
        let core_min_degree = g
            .delta_vertices()
            .iter()
            .map(|&v| g.core_degree(v))
            .min()
            .unwrap_or(0);
        Ok(GraphFacts {
            n: g.n(),
            m: g.edge_count(),
            delta: g.max_degree(),
            connected: g.is_connected(),
            chi_prime: cv.chi_prime,
            class: cv.class,
            overfull: is_overfull(g),
            just_overfull: is_just_overfull(g),
            core_min_degree,
            critical,
            delta_critical,
            witness: Some(cv.witness),
        })
    }

    pub fn class_two(&self) -> bool {
        self.class == EdgeClass::Two
    }

    pub fn is_critical(&self, e: EdgeId) -> bool {
        self.critical.get(e).copied().unwrap_or(false)
    }

    pub fn critical_edges(&self) -> Vec<EdgeId> {
        (0..self.critical.len()).filter(|&e| self.critical[e]).collect()
    }
}

/// Light Δ-vertices.
pub(crate) fn light_delta_vertices(g: &SimpleGraph) -> Vec<Vertex> {
    let d = g.max_degree();
    g.light_vertices().into_iter().filter(|&v| g.degree(v) == d).collect()
}
