//! Partial proper edge colourings, missing sets, Kempe chains and swaps.

mod chain;
mod colormap;
mod colorset;

pub use chain::{Chain, ChainKind};
pub use colormap::ColorMap;
pub use colorset::{Color, ColorSet, MAX_COLORS};

use crate::graph::{EdgeId, SimpleGraph, Vertex};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("assignment has {found} entries, graph has {expected} edges")]
    LengthMismatch { expected: usize, found: usize },
    #[error("edge {edge} has colour {color} outside [1,{k}]")]
    ColorOutOfRange { edge: EdgeId, color: Color, k: u8 },
    #[error("edges {0} and {1} are both uncoloured")]
    MultipleUncolored(EdgeId, EdgeId),
    #[error("palette size {0} exceeds 64")]
    PaletteTooLarge(usize),
    #[error("invalid colour pair ({a},{b}) for palette {k}")]
    BadColorPair { a: Color, b: Color, k: u8 },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("vertex {vertex} sees both colours {a} and {b}")]
    BothPresent { vertex: Vertex, a: Color, b: Color },
    #[error("chain no longer matches the colouring")]
    StaleChain,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cannot parse colouring: {0}")]
    Parse(String),
    #[error("colourings refer to different graphs or palettes")]
    Mismatch,
}

/// First problem found by [`PartialEdgeColoring::validate_detail`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Improper { vertex: Vertex, color: Color },
    CacheMismatch { vertex: Vertex },
}

const NO_EDGE: u32 = u32::MAX;

/// A proper `k`-edge-colouring of `G - e` with at most one uncoloured edge,
/// carrying per-vertex missing sets and a colour-to-edge table.
#[derive(Clone)]
pub struct PartialEdgeColoring {
    graph: Arc<SimpleGraph>,
    k: u8,
    assignment: Vec<Option<Color>>,
    uncolored: Option<EdgeId>,
    missing: Vec<ColorSet>,
    slots: Vec<u32>,
}

impl PartialEq for PartialEdgeColoring {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k
            && self.assignment == other.assignment
            && (Arc::ptr_eq(&self.graph, &other.graph) || *self.graph == *other.graph)
    }
}
impl Eq for PartialEdgeColoring {}

impl fmt::Debug for PartialEdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring({})", self.to_line())
    }
}

impl PartialEdgeColoring {
    /// Builds a colouring from an explicit assignment. Properness is not
    /// enforced here; see [`validate`](Self::validate).
    pub fn new(
        graph: Arc<SimpleGraph>,
        k: u8,
        assignment: Vec<Option<Color>>,
    ) -> Result<Self, ColoringError> {
        if k as usize > MAX_COLORS {
            return Err(ColoringError::PaletteTooLarge(k as usize));
        }
        if assignment.len() != graph.edge_count() {
            return Err(ColoringError::LengthMismatch {
                expected: graph.edge_count(),
                found: assignment.len(),
            });
        }
        let mut uncolored = None;
        for (e, c) in assignment.iter().enumerate() {
            match c {
                None => {
                    if let Some(first) = uncolored {
                        return Err(ColoringError::MultipleUncolored(first, e));
                    }
                    uncolored = Some(e);
                }
                Some(c) if *c == 0 || *c > k => {
                    return Err(ColoringError::ColorOutOfRange { edge: e, color: *c, k })
                }
                _ => {}
            }
        }
        let mut phi = PartialEdgeColoring {
            missing: vec![ColorSet::full(k); graph.n()],
            slots: vec![NO_EDGE; graph.n() * k as usize],
            graph,
            k,
            assignment,
            uncolored,
        };
        phi.rebuild_caches();
        Ok(phi)
    }

    /// Same as [`new`](Self::new) with `0` standing for "uncoloured".
    pub fn from_slice(graph: Arc<SimpleGraph>, k: u8, colors: &[Color]) -> Result<Self, ColoringError> {
        let assignment = colors.iter().map(|&c| (c != 0).then_some(c)).collect();
        Self::new(graph, k, assignment)
    }

    fn rebuild_caches(&mut self) {
        let k = self.k as usize;
        self.missing.iter_mut().for_each(|m| *m = ColorSet::full(self.k));
        self.slots.iter_mut().for_each(|s| *s = NO_EDGE);
        for (e, c) in self.assignment.iter().enumerate() {
            if let Some(c) = *c {
                let (a, b) = self.graph.edge(e);
                for v in [a, b] {
                    self.missing[v].remove(c);
                    let slot = &mut self.slots[v * k + c as usize - 1];
                    if *slot == NO_EDGE {
                        *slot = e as u32;
                    }
                }
            }
        }
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<SimpleGraph> {
        &self.graph
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn palette(&self) -> ColorSet {
        ColorSet::full(self.k)
    }

    #[inline]
    pub fn color(&self, e: EdgeId) -> Option<Color> {
        self.assignment[e]
    }

    pub fn assignment(&self) -> &[Option<Color>] {
        &self.assignment
    }

    pub fn uncolored(&self) -> Option<EdgeId> {
        self.uncolored
    }

    pub fn is_complete(&self) -> bool {
        self.uncolored.is_none()
    }

    /// φ̄(v).
    #[inline]
    pub fn missing(&self, v: Vertex) -> ColorSet {
        self.missing[v]
    }

    /// φ(v).
    #[inline]
    pub fn present(&self, v: Vertex) -> ColorSet {
        self.palette().difference(self.missing[v])
    }

    /// Union of φ̄ over `xs`.
    pub fn missing_union(&self, xs: &[Vertex]) -> ColorSet {
        xs.iter().fold(ColorSet::EMPTY, |acc, &v| acc.union(self.missing[v]))
    }

    /// The edge at `v` coloured `c`.
    #[inline]
    pub fn edge_at(&self, v: Vertex, c: Color) -> Option<EdgeId> {
        if c == 0 || c > self.k {
            return None;
        }
        let s = self.slots[v * self.k as usize + c as usize - 1];
        (s != NO_EDGE).then_some(s as EdgeId)
    }

    /// The neighbour of `v` across its `c`-coloured edge.
    pub fn neighbor_via(&self, v: Vertex, c: Color) -> Option<Vertex> {
        self.edge_at(v, c).map(|e| self.graph.other_end(e, v))
    }

    /// Colour of edge `uv`, if the edge exists and is coloured.
    pub fn color_between(&self, u: Vertex, v: Vertex) -> Option<Color> {
        self.graph.edge_between(u, v).and_then(|e| self.assignment[e])
    }

    pub fn validate(&self) -> bool {
        self.validate_detail().is_ok()
    }

    /// Full recomputation of properness and the caches.
    pub fn validate_detail(&self) -> Result<(), Violation> {
        let g = &*self.graph;
        for v in 0..g.n() {
            let mut seen = ColorSet::EMPTY;
            for &(_, e) in g.incident(v) {
                if let Some(c) = self.assignment[e] {
                    if seen.contains(c) {
                        return Err(Violation::Improper { vertex: v, color: c });
                    }
                    seen.insert(c);
                }
            }
            if self.missing[v] != self.palette().difference(seen) {
                return Err(Violation::CacheMismatch { vertex: v });
            }
            for c in 1..=self.k {
                let expect = g
                    .incident(v)
                    .iter()
                    .find(|&&(_, e)| self.assignment[e] == Some(c))
                    .map(|&(_, e)| e);
                if self.edge_at(v, c) != expect {
                    return Err(Violation::CacheMismatch { vertex: v });
                }
            }
        }
        Ok(())
    }

    /// Pairwise disjoint missing sets on `xs`.
    pub fn is_elementary(&self, xs: &[Vertex]) -> bool {
        self.elementary_clash(xs).is_none()
    }

    /// First pair of vertices in `xs` sharing a missing colour.
    pub fn elementary_clash(&self, xs: &[Vertex]) -> Option<(Vertex, Vertex, Color)> {
        for (i, &u) in xs.iter().enumerate() {
            for &v in &xs[i + 1..] {
                if u == v {
                    continue;
                }
                if let Some(c) = self.missing[u].intersection(self.missing[v]).first() {
                    return Some((u, v, c));
                }
            }
        }
        None
    }

    /// Applies a batch of edge recolourings. The caller guarantees that the
    /// result is proper.
    pub(crate) fn recolor(&mut self, changes: &[(EdgeId, Option<Color>)]) {
        let k = self.k as usize;
        for &(e, _) in changes {
            if let Some(old) = self.assignment[e] {
                let (a, b) = self.graph.edge(e);
                for v in [a, b] {
                    self.missing[v].insert(old);
                    self.slots[v * k + old as usize - 1] = NO_EDGE;
                }
            }
        }
        for &(e, new) in changes {
            self.assignment[e] = new;
            if let Some(c) = new {
                let (a, b) = self.graph.edge(e);
                for v in [a, b] {
                    self.missing[v].remove(c);
                    self.slots[v * k + c as usize - 1] = e as u32;
                }
            }
        }
        self.uncolored = self.assignment.iter().position(Option::is_none);
    }

    fn check_pair(&self, a: Color, b: Color) -> Result<(), ColoringError> {
        if a == b || a == 0 || b == 0 || a > self.k || b > self.k {
            Err(ColoringError::BadColorPair { a, b, k: self.k })
        } else {
            Ok(())
        }
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), ColoringError> {
        if v < self.graph.n() {
            Ok(())
        } else {
            Err(ColoringError::VertexOutOfRange(v))
        }
    }

    fn walk(&self, start: Vertex, first: Color, a: Color, b: Color) -> (Vec<Vertex>, Vec<EdgeId>, bool) {
        let mut vertices = vec![start];
        let mut edges = Vec::new();
        let (mut cur, mut c) = (start, first);
        while let Some(e) = self.edge_at(cur, c) {
            let next = self.graph.other_end(e, cur);
            edges.push(e);
            if next == start {
                return (vertices, edges, true);
            }
            if edges.len() > self.graph.edge_count() {
                break; // only reachable on improper input
            }
            vertices.push(next);
            cur = next;
            c = if c == a { b } else { a };
        }
        (vertices, edges, false)
    }

    /// C_v(a, b): the (a,b)-chain through `v`.
    ///
    /// A path that ends at `v` is listed from `v`; a path through `v` is
    /// listed from its lower-id end; a cycle starts at `v` and heads to the
    /// lower-id neighbour first.
    pub fn chain_at(&self, v: Vertex, a: Color, b: Color) -> Result<Chain, ColoringError> {
        self.check_vertex(v)?;
        self.check_pair(a, b)?;
        let colors = (a.min(b), a.max(b));
        let (ea, eb) = (self.edge_at(v, a), self.edge_at(v, b));
        let path = |vertices, edges| Chain {
            colors,
            kind: ChainKind::Path,
            vertices,
            edges,
        };
        match (ea, eb) {
            (None, None) => Ok(path(vec![v], vec![])),
            (Some(_), None) | (None, Some(_)) => {
                let first = if ea.is_some() { a } else { b };
                let (vs, es, _) = self.walk(v, first, a, b);
                Ok(path(vs, es))
            }
            (Some(ea), Some(eb)) => {
                let (na, nb) = (self.graph.other_end(ea, v), self.graph.other_end(eb, v));
                let (first, second) = if na < nb { (a, b) } else { (b, a) };
                let (vf, ef, closed) = self.walk(v, first, a, b);
                if closed {
                    return Ok(Chain {
                        colors,
                        kind: ChainKind::Cycle,
                        vertices: vf,
                        edges: ef,
                    });
                }
                let (vb, eb, _) = self.walk(v, second, a, b);
                let mut vertices: Vec<Vertex> = vb.into_iter().rev().collect();
                vertices.extend_from_slice(&vf[1..]);
                let mut edges: Vec<EdgeId> = eb.into_iter().rev().collect();
                edges.extend_from_slice(&ef);
                if vertices.last() < vertices.first() {
                    vertices.reverse();
                    edges.reverse();
                }
                Ok(path(vertices, edges))
            }
        }
    }

    /// Interchanges the two colours on `chain`.
    pub fn kempe_swap(&self, chain: &Chain) -> Result<Self, ColoringError> {
        let mut out = self.clone();
        out.kempe_swap_in_place(chain)?;
        Ok(out)
    }

    pub fn kempe_swap_in_place(&mut self, chain: &Chain) -> Result<(), ColoringError> {
        let (a, b) = chain.colors;
        let start = *chain.vertices.first().ok_or(ColoringError::StaleChain)?;
        let fresh = self.chain_at(start, a, b).map_err(|_| ColoringError::StaleChain)?;
        if fresh.kind != chain.kind || !same_edge_set(&fresh.edges, &chain.edges) {
            return Err(ColoringError::StaleChain);
        }
        self.swap_edges(&fresh.edges, a, b);
        Ok(())
    }

    fn swap_edges(&mut self, edges: &[EdgeId], a: Color, b: Color) {
        let changes: Vec<_> = edges
            .iter()
            .map(|&e| {
                let c = self.assignment[e].expect("chain edges are coloured");
                (e, Some(if c == a { b } else { a }))
            })
            .collect();
        self.recolor(&changes);
    }

    /// Swap on C_x(a, b). `a == b` is the vacuous recolouring.
    pub fn swap_at(&self, x: Vertex, a: Color, b: Color) -> Result<Self, ColoringError> {
        let mut out = self.clone();
        out.swap_at_in_place(x, a, b)?;
        Ok(out)
    }

    pub fn swap_at_in_place(&mut self, x: Vertex, a: Color, b: Color) -> Result<Chain, ColoringError> {
        if a == b {
            self.check_vertex(x)?;
            return Ok(Chain {
                colors: (a, b),
                kind: ChainKind::Path,
                vertices: vec![x],
                edges: vec![],
            });
        }
        let chain = self.chain_at(x, a, b)?;
        self.swap_edges(&chain.edges, chain.colors.0, chain.colors.1);
        Ok(chain)
    }

    /// True iff P_u(a,b) = P_v(a,b). Each vertex must miss `a` or `b`.
    pub fn are_linked(&self, u: Vertex, v: Vertex, a: Color, b: Color) -> Result<bool, ColoringError> {
        self.check_pair(a, b)?;
        for w in [u, v] {
            self.check_vertex(w)?;
            let m = self.missing[w];
            if !m.contains(a) && !m.contains(b) {
                return Err(ColoringError::BothPresent { vertex: w, a, b });
            }
        }
        if u == v {
            return Ok(true);
        }
        Ok(self.chain_at(u, a, b)?.contains(v))
    }

    /// The (a,b)-(b,c) swap at `x`: swap P_x(a,b), then P_x(b,c) in the
    /// intermediate colouring. Identity when `a == b`.
    pub fn double_swap_at(&self, x: Vertex, a: Color, b: Color, c: Color) -> Result<Self, ColoringError> {
        self.check_vertex(x)?;
        if a == b {
            return Ok(self.clone());
        }
        let m = self.missing[x];
        if !m.contains(a) || m.contains(b) || m.contains(c) {
            return Err(ColoringError::Precondition(format!(
                "need {a} missing and {b},{c} present at vertex {x}"
            )));
        }
        let mut out = self.clone();
        out.swap_at_in_place(x, a, b)?;
        out.swap_at_in_place(x, b, c)?;
        Ok(out)
    }

    /// Applies the colour bijection to every edge.
    pub fn relabel(&self, map: &ColorMap) -> Result<Self, ColoringError> {
        if map.k() != self.k {
            return Err(ColoringError::Mismatch);
        }
        let assignment = self.assignment.iter().map(|c| c.map(|c| map.apply(c))).collect();
        Self::new(self.graph.clone(), self.k, assignment)
    }

    /// `k; 0=c0,1=c1,...` with `_` for the uncoloured edge.
    pub fn to_line(&self) -> String {
        let body: Vec<String> = self
            .assignment
            .iter()
            .enumerate()
            .map(|(e, c)| match c {
                Some(c) => format!("{e}={c}"),
                None => format!("{e}=_"),
            })
            .collect();
        format!("{}; {}", self.k, body.join(","))
    }

    pub fn from_line(graph: Arc<SimpleGraph>, line: &str) -> Result<Self, ColoringError> {
        let bad = |m: &str| ColoringError::Parse(m.to_string());
        let (k, body) = line.split_once(';').ok_or_else(|| bad("missing ';'"))?;
        let k: u8 = k.trim().parse().map_err(|_| bad("palette size"))?;
        let m = graph.edge_count();
        let mut slots: Vec<Option<Option<Color>>> = vec![None; m];
        for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (e, c) = item.split_once('=').ok_or_else(|| bad(item))?;
            let e: usize = e.trim().parse().map_err(|_| bad(item))?;
            if e >= m || slots[e].is_some() {
                return Err(bad(item));
            }
            let c = match c.trim() {
                "_" => None,
                s => Some(s.parse::<Color>().map_err(|_| bad(item))?),
            };
            slots[e] = Some(c);
        }
        let assignment = slots
            .into_iter()
            .map(|s| s.ok_or_else(|| bad("edge missing from assignment")))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(graph, k, assignment)
    }

    /// 64-bit FNV hash of the assignment vector.
    pub fn assignment_hash(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for c in &self.assignment {
            h ^= c.unwrap_or(0) as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        h
    }

    /// Number of vertices missing `c`, for each colour `c` in `[1,k]`.
    pub fn missing_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.k as usize];
        for m in &self.missing {
            for c in m.iter() {
                counts[c as usize - 1] += 1;
            }
        }
        counts
    }
}

fn same_edge_set(a: &[EdgeId], b: &[EdgeId]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    x.sort_unstable();
    y.sort_unstable();
    x == y
}

/// Serialized as its `to_line` form.
impl serde::Serialize for PartialEdgeColoring {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_line())
    }
}

#[cfg(test)]
mod tests;
