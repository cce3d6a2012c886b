//! Immutable simple graphs with dense vertex and edge ids.

mod generators;
mod graph6;

pub use generators::{complete, cycle, delete_edge, delete_vertex, path, petersen, star};
pub use graph6::{from_graph6, read_graph6_lines, to_graph6, Graph6Error};

use serde::Serialize;
use std::collections::HashMap;
use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("edge id {edge} out of range ({m} edges)")]
    EdgeOutOfRange { edge: EdgeId, m: usize },
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("parallel edge {0}-{1}")]
    Parallel(Vertex, Vertex),
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
}

/// A finite simple undirected graph.
///
/// Edges are stored sorted by `(min endpoint, max endpoint)` and the edge id
/// is the position in that list. Adjacency lists are sorted.
#[derive(Clone, Debug)]
pub struct SimpleGraph {
    n: usize,
    adjacency: Vec<Vec<Vertex>>,
    incident: Vec<Vec<(Vertex, EdgeId)>>,
    edges: Vec<(Vertex, Vertex)>,
    edge_index: HashMap<(Vertex, Vertex), EdgeId>,
    fingerprint: u64,
}

impl PartialEq for SimpleGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}
impl Eq for SimpleGraph {}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        Self::from_edges(n, std::iter::empty()).expect("edgeless graph is valid")
    }

    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut edges = Vec::new();
        for (a, b) in pairs {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::Parallel(w[0].0, w[0].1));
            }
        }
        let mut incident = vec![Vec::new(); n];
        let mut edge_index = HashMap::with_capacity(edges.len());
        for (id, &(a, b)) in edges.iter().enumerate() {
            incident[a].push((b, id));
            incident[b].push((a, id));
            edge_index.insert((a, b), id);
        }
        for list in &mut incident {
            list.sort_unstable();
        }
        let adjacency = incident
            .iter()
            .map(|l| l.iter().map(|&(w, _)| w).collect())
            .collect();
        let fingerprint = fnv(n, &edges);
        Ok(SimpleGraph {
            n,
            adjacency,
            incident,
            edges,
            edge_index,
            fingerprint,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    /// `(neighbor, edge id)` pairs at `v`, sorted by neighbor.
    #[inline]
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.incident[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.edge_index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<(), GraphError> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(GraphError::EdgeOutOfRange {
                edge: e,
                m: self.edges.len(),
            })
        }
    }

    /// Stable 64-bit identity of the labelled graph.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        (0..self.n).filter(|&v| self.degree(v) == 0).collect()
    }

    pub fn delta_vertices(&self) -> Vec<Vertex> {
        let delta = self.max_degree();
        (0..self.n).filter(|&v| self.degree(v) == delta).collect()
    }

    /// Number of Δ-neighbours of `v`.
    pub fn core_degree(&self, v: Vertex) -> usize {
        let delta = self.max_degree();
        self.adjacency[v]
            .iter()
            .filter(|&&w| self.degree(w) == delta)
            .count()
    }

    /// Neighbours of `v` with degree exactly `k`.
    pub fn neighbors_of_degree(&self, v: Vertex, k: usize) -> Vec<Vertex> {
        self.adjacency[v]
            .iter()
            .copied()
            .filter(|&w| self.degree(w) == k)
            .collect()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let delta = self.max_degree();
        let delta_vertices: Vec<Vertex> = (0..self.n).filter(|&v| degrees[v] == delta).collect();
        let core: Vec<usize> = delta_vertices.iter().map(|&v| self.core_degree(v)).collect();
        DegreeProfile {
            core_min_degree: core.iter().copied().min().unwrap_or(0),
            core_max_degree: core.iter().copied().max().unwrap_or(0),
            degrees,
            delta,
            delta_vertices,
        }
    }

    /// Vertices adjacent to at most two Δ-vertices.
    pub fn light_vertices(&self) -> Vec<Vertex> {
        (0..self.n).filter(|&v| self.core_degree(v) <= 2).collect()
    }

    /// True when the subgraph induced by the Δ-vertices is a forest.
    pub fn is_core_acyclic(&self) -> bool {
        let delta = self.max_degree();
        let in_core: Vec<bool> = (0..self.n).map(|v| self.degree(v) == delta).collect();
        let core_vertices = in_core.iter().filter(|&&b| b).count();
        let core_edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| in_core[a] && in_core[b])
            .count();
        // forest iff |E| = |V| - components
        let mut seen = vec![false; self.n];
        let mut components = 0;
        for s in 0..self.n {
            if !in_core[s] || seen[s] {
                continue;
            }
            components += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adjacency[v] {
                    if in_core[w] && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        core_edges + components == core_vertices
    }
}

fn fnv(n: usize, edges: &[(Vertex, Vertex)]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |x: u64| {
        for b in x.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    };
    eat(n as u64);
    for &(a, b) in edges {
        eat(a as u64);
        eat(b as u64);
    }
    h
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub delta: usize,
    pub delta_vertices: Vec<Vertex>,
    pub core_min_degree: usize,
    pub core_max_degree: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_parallels() {
        assert_eq!(
            SimpleGraph::from_edges(3, [(1, 1)]).unwrap_err(),
            GraphError::Loop(1)
        );
        assert_eq!(
            SimpleGraph::from_edges(3, [(0, 1), (1, 0)]).unwrap_err(),
            GraphError::Parallel(0, 1)
        );
        assert!(SimpleGraph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn edges_sorted_and_indexed() {
        let g = SimpleGraph::from_edges(4, [(3, 2), (1, 0), (0, 3)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (2, 3)]);
        assert_eq!(g.edge_between(3, 0), Some(1));
        assert_eq!(g.neighbors(3), &[0, 2]);
        assert_eq!(g.other_end(2, 3), 2);
    }

    #[test]
    fn profile_of_k5_and_star() {
        let k5 = complete(5);
        let p = k5.degree_profile();
        assert_eq!((p.delta, p.delta_vertices.len()), (4, 5));
        assert_eq!((p.core_min_degree, p.core_max_degree), (4, 4));
        assert!(k5.light_vertices().is_empty());
        assert!(!k5.is_core_acyclic());

        let s = star(3);
        let p = s.degree_profile();
        assert_eq!((p.delta, p.delta_vertices.clone()), (3, vec![0]));
        assert_eq!((p.core_min_degree, p.core_max_degree), (0, 0));
        assert!(s.is_core_acyclic());
    }

    #[test]
    fn c5_with_pendant_core() {
        // pendant at vertex 0 makes 0 the only degree-3 vertex
        let g = SimpleGraph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap();
        let p = g.degree_profile();
        assert_eq!(p.delta, 3);
        assert_eq!(p.delta_vertices, vec![0]);
        assert!(g.is_core_acyclic());
        assert_eq!(g.light_vertices().len(), 6);
    }

    #[test]
    fn cycle_all_light() {
        assert_eq!(cycle(5).unwrap().light_vertices(), vec![0, 1, 2, 3, 4]);
    }
}
