use super::RecolorError;
use crate::coloring::{Color, ColorSet, PartialEdgeColoring};
use crate::fan::Multifan;
use crate::graph::Vertex;
use serde::Serialize;

/// How a τ-sequence ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type")]
pub enum TauKind {
    /// `φ̄(v_t) = τ`: a rotation.
    A,
    /// `φ̄(v_t)` is the fan colour `terminal`.
    B { terminal: Color },
    /// `φ̄(v_t) = φ̄(v_{index−1})`, `index ∈ [2, t−1]`.
    C { index: usize },
}

/// The sequence `v1..vt` of (Δ−1)-neighbours of `r` off the fan reached by
/// following `τ`, then `φ̄(v1)`, `φ̄(v2)`, ... along edges at `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TauSequence {
    pub tau: Color,
    pub center: Vertex,
    pub vertices: Vec<Vertex>,
    /// `φ̄(v_i)`.
    pub missing: Vec<Color>,
    #[serde(flatten)]
    pub kind: TauKind,
}

impl TauSequence {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn last(&self) -> Vertex {
        *self.vertices.last().expect("τ-sequences are nonempty")
    }

    /// `φ̄(v_t)`.
    pub fn terminal_color(&self) -> Color {
        *self.missing.last().expect("τ-sequences are nonempty")
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            TauKind::A => "A",
            TauKind::B { .. } => "B",
            TauKind::C { .. } => "C",
        }
    }

    pub fn is_rotation(&self) -> bool {
        self.kind == TauKind::A
    }

    /// A rotation, or type B ending in a colour the center misses.
    pub fn shift_eligible(&self, phi: &PartialEdgeColoring) -> bool {
        match self.kind {
            TauKind::A => true,
            TauKind::B { terminal } => phi.missing(self.center).contains(terminal),
            TauKind::C { .. } => false,
        }
    }
}

pub(crate) fn is_candidate(phi: &PartialEdgeColoring, fan: &Multifan, v: Vertex) -> bool {
    let g = phi.graph();
    g.has_edge(fan.center, v) && g.degree(v) + 1 == g.max_degree() && !fan.contains(v)
}

/// The τ-sequence at the fan's center.
///
/// Each step is forced because a (Δ−1)-vertex misses exactly one colour,
/// so the result is unique whenever it exists.
pub fn build_tau_sequence(
    phi: &PartialEdgeColoring,
    fan: &Multifan,
    tau: Color,
) -> Result<TauSequence, RecolorError> {
    if tau == 0 || tau > phi.k() {
        return Err(RecolorError::Precondition(format!("colour {tau} outside the palette")));
    }
    let fan_colors = phi.missing_union(&fan.vertices());
    if fan_colors.contains(tau) {
        return Err(RecolorError::TauInFan(tau));
    }
    let g = phi.graph();
    let r = fan.center;
    let (mut vertices, mut missing) = (Vec::new(), Vec::<Color>::new());
    let mut c = tau;
    loop {
        // c is not missing at r, so the edge exists
        let v = phi
            .neighbor_via(r, c)
            .ok_or_else(|| RecolorError::Precondition(format!("center misses colour {c}")))?;
        if !is_candidate(phi, fan, v) {
            return Err(if g.degree(v) == g.max_degree() {
                RecolorError::MaximalityViolation { vertex: v, color: c }
            } else {
                RecolorError::NotCandidate(v)
            });
        }
        let m = phi.missing(v);
        let m = m.only().ok_or(RecolorError::NotSingleton(v, m.len()))?;
        vertices.push(v);
        missing.push(m);
        let kind = if m == tau {
            TauKind::A
        } else if fan_colors.contains(m) {
            TauKind::B { terminal: m }
        } else if let Some(j) = missing[..missing.len() - 1].iter().position(|&x| x == m) {
            TauKind::C { index: j + 2 }
        } else {
            c = m;
            continue;
        };
        return Ok(TauSequence {
            tau,
            center: r,
            vertices,
            missing,
            kind,
        });
    }
}

/// Every vertex sequence meeting the definition, found by depth-first
/// search over the candidates instead of by forced steps.
pub fn all_tau_sequences(phi: &PartialEdgeColoring, fan: &Multifan, tau: Color) -> Vec<Vec<Vertex>> {
    let g = phi.graph();
    let r = fan.center;
    let fan_colors = phi.missing_union(&fan.vertices());
    let cands: Vec<Vertex> = g
        .neighbors(r)
        .iter()
        .copied()
        .filter(|&v| is_candidate(phi, fan, v))
        .collect();
    let mut out = Vec::new();
    if fan_colors.contains(tau) {
        return out;
    }
    let mut seq = Vec::new();
    dfs(phi, r, tau, fan_colors, &cands, &mut seq, &mut out);
    out
}

fn dfs(
    phi: &PartialEdgeColoring,
    r: Vertex,
    tau: Color,
    fan_colors: ColorSet,
    cands: &[Vertex],
    seq: &mut Vec<Vertex>,
    out: &mut Vec<Vec<Vertex>>,
) {
    let want = match seq.last() {
        None => tau,
        Some(&v) => match phi.missing(v).only() {
            Some(m) => m,
            None => return,
        },
    };
    for &w in cands {
        if seq.contains(&w) || phi.color_between(r, w) != Some(want) {
            continue;
        }
        // every earlier vertex becomes an inner one
        let inner_ok = seq.iter().enumerate().all(|(i, &v)| {
            let m = phi.missing(v);
            m.len() == 1
                && m.is_disjoint(fan_colors)
                && seq[..i].iter().all(|&u| phi.missing(u).is_disjoint(m))
        });
        if !inner_ok {
            return;
        }
        seq.push(w);
        if let Some(m) = phi.missing(w).only() {
            let prev: Vec<Color> = seq[..seq.len() - 1]
                .iter()
                .filter_map(|&v| phi.missing(v).only())
                .collect();
            let t = seq.len();
            let ends = m == tau
                || fan_colors.contains(m)
                || (t >= 3 && prev[..t - 2].contains(&m));
            if ends {
                out.push(seq.clone());
            }
        }
        dfs(phi, r, tau, fan_colors, cands, seq, out);
        seq.pop();
    }
}
