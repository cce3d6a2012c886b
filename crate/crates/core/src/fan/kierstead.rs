use super::{EdgeInstance, FanError};
use crate::coloring::{Color, ColorSet, PartialEdgeColoring};
use crate::graph::{EdgeId, Vertex};
use crate::verdict::Verdict;
use serde::Serialize;
use serde_json::json;

/// A path `v0 v1 ... vp` starting with the uncoloured edge `v0v1` in which
/// every later edge `v_{i-1}v_i` carries a colour missing at some `v_j`,
/// `j ≤ i − 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KiersteadPath {
    pub vertices: Vec<Vertex>,
    pub uncolored_edge: EdgeId,
    /// `φ(v_{i-1}v_i)`, `None` for the first edge.
    pub edge_colors: Vec<Option<Color>>,
}

impl KiersteadPath {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks the path condition and distinctness against `phi`.
    pub fn is_valid(&self, phi: &PartialEdgeColoring) -> bool {
        let g = phi.graph();
        let vs = &self.vertices;
        if vs.len() < 2 || phi.uncolored() != Some(self.uncolored_edge) {
            return false;
        }
        if g.edge_between(vs[0], vs[1]) != Some(self.uncolored_edge) {
            return false;
        }
        let mut avail = ColorSet::EMPTY;
        for i in 2..vs.len() {
            if vs[..i].contains(&vs[i]) {
                return false;
            }
            avail = avail.union(phi.missing(vs[i - 2]));
            let Some(e) = g.edge_between(vs[i - 1], vs[i]) else {
                return false;
            };
            match phi.color(e) {
                Some(c) if avail.contains(c) => {}
                _ => return false,
            }
        }
        true
    }

    fn build(phi: &PartialEdgeColoring, e: EdgeId, vertices: Vec<Vertex>) -> Self {
        let g = phi.graph();
        let edge_colors = (1..vertices.len())
            .map(|i| phi.color(g.edge_between(vertices[i - 1], vertices[i]).expect("path edge")))
            .collect();
        KiersteadPath {
            vertices,
            uncolored_edge: e,
            edge_colors,
        }
    }
}

fn start(phi: &PartialEdgeColoring, v0: Vertex) -> Result<(EdgeId, Vertex), FanError> {
    let e = phi.uncolored().ok_or(FanError::NoUncoloredEdge)?;
    let (a, b) = phi.graph().edge(e);
    match v0 {
        _ if v0 == a => Ok((e, b)),
        _ if v0 == b => Ok((e, a)),
        _ => Err(FanError::NotEndpoint(v0)),
    }
}

/// Greedy growth from `v0` up to `max_len` vertices, lowest colour first.
pub fn grow_kierstead_path(
    phi: &PartialEdgeColoring,
    v0: Vertex,
    max_len: usize,
) -> Result<KiersteadPath, FanError> {
    let (e, v1) = start(phi, v0)?;
    let mut vs = vec![v0, v1];
    let mut avail = ColorSet::EMPTY;
    while vs.len() < max_len {
        avail = avail.union(phi.missing(vs[vs.len() - 2]));
        let last = *vs.last().unwrap();
        let next = avail
            .iter()
            .find_map(|c| phi.neighbor_via(last, c).filter(|y| !vs.contains(y)));
        match next {
            Some(y) => vs.push(y),
            None => break,
        }
    }
    Ok(KiersteadPath::build(phi, e, vs))
}

/// Every Kierstead path on four vertices starting at `v0`.
pub fn kierstead_paths4(phi: &PartialEdgeColoring, v0: Vertex) -> Result<Vec<KiersteadPath>, FanError> {
    let (e, v1) = start(phi, v0)?;
    let mut out = Vec::new();
    for c2 in phi.missing(v0).iter() {
        let Some(v2) = phi.neighbor_via(v1, c2) else { continue };
        if v2 == v0 {
            continue;
        }
        let avail = phi.missing(v0).union(phi.missing(v1));
        for c3 in avail.iter() {
            match phi.neighbor_via(v2, c3) {
                Some(v3) if v3 != v0 && v3 != v1 => {
                    out.push(KiersteadPath::build(phi, e, vec![v0, v1, v2, v3]))
                }
                _ => {}
            }
        }
    }
    Ok(out)
}

/// Four-vertex Kierstead paths are elementary once one of the inner
/// vertices `v1`, `v2` has degree below Δ.
///
/// Gating on the outer pair `v2`, `v3` instead is not enough: Petersen
/// minus a vertex has a four-vertex path with `d(v3) < Δ` whose ends share
/// a missing colour (see the unit tests).
pub fn verify_kp_elementary(inst: &EdgeInstance, phi: &PartialEdgeColoring, path: &KiersteadPath) -> Verdict {
    if let Some(v) = inst.critical_gate() {
        return v;
    }
    if phi.uncolored() != Some(inst.edge) || !path.is_valid(phi) {
        return Verdict::inapplicable("not a Kierstead path for this edge and colouring");
    }
    if path.len() != 4 {
        return Verdict::inapplicable("path does not have four vertices");
    }
    let g = phi.graph();
    let (v1, v2) = (path.vertices[1], path.vertices[2]);
    if g.degree(v1).min(g.degree(v2)) >= inst.delta {
        return Verdict::inapplicable("v1 and v2 are both Δ-vertices");
    }
    match phi.elementary_clash(&path.vertices) {
        None => Verdict::pass(1),
        Some((x, y, c)) => Verdict::fail(
            "Kierstead path is not elementary",
            json!({
                "coloring": phi.to_line(),
                "path": path.vertices,
                "clash": [x, y],
                "color": c,
            }),
        ),
    }
}
