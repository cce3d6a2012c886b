use super::{Derivation, RecolorError, TauSequence, Transcript};
use crate::coloring::{Color, Violation};
use crate::coloring::PartialEdgeColoring;
use crate::graph::Vertex;
use serde::Serialize;

/// Recolours every edge `rv`, `v ∈ range`, with the single colour missing
/// at `v`. All edges change at once; an improper result is rejected and
/// `phi` is left alone.
pub fn shift(phi: &PartialEdgeColoring, r: Vertex, range: &[Vertex]) -> Result<PartialEdgeColoring, RecolorError> {
    let g = phi.graph();
    let mut changes = Vec::with_capacity(range.len());
    for (i, &v) in range.iter().enumerate() {
        if range[..i].contains(&v) {
            return Err(RecolorError::Repeated(v));
        }
        let e = g.edge_between(r, v).ok_or(RecolorError::NotNeighbor(v))?;
        if phi.color(e).is_none() {
            return Err(RecolorError::UncoloredSpoke(v));
        }
        let m = phi.missing(v);
        let c = m.only().ok_or(RecolorError::NotSingleton(v, m.len()))?;
        changes.push((e, Some(c)));
    }
    let mut out = phi.clone();
    out.recolor(&changes);
    match out.validate_detail() {
        Ok(()) => Ok(out),
        Err(Violation::Improper { vertex, color }) => Err(RecolorError::Improper { vertex, color }),
        Err(Violation::CacheMismatch { vertex }) => Err(RecolorError::Precondition(format!(
            "colour cache out of date at {vertex}"
        ))),
    }
}

/// A-shifting or B-shifting of a τ-sequence.
pub fn shift_tau(phi: &PartialEdgeColoring, seq: &TauSequence) -> Result<PartialEdgeColoring, RecolorError> {
    if !seq.shift_eligible(phi) {
        return Err(RecolorError::NotEligible(
            "neither a rotation nor type B ending in a colour missing at the center".into(),
        ));
    }
    shift(phi, seq.center, &seq.vertices)
}

/// Result of cutting a `(τ, *)`-chain by shifting the τ-sequence.
#[derive(Clone, Debug, Serialize)]
pub struct Unlinked {
    pub coloring: PartialEdgeColoring,
    pub transcript: Transcript,
    /// Which of the two ends now shares its chain with `v1`.
    pub x_meets_v1: bool,
    pub y_meets_v1: bool,
}

/// `x` and `y` end a `(τ, other)`-chain through `rv1`; shifting the
/// τ-sequence makes `v1` miss τ, so it splits the chain.
pub fn unlink_via_shifting(
    phi: &PartialEdgeColoring,
    seq: &TauSequence,
    other: Color,
    x: Vertex,
    y: Vertex,
) -> Result<Unlinked, RecolorError> {
    let tau = seq.tau;
    let v1 = seq.vertices[0];
    let g = phi.graph();
    if seq.vertices.contains(&x) || seq.vertices.contains(&y) {
        return Err(RecolorError::Precondition("an end lies on the τ-sequence".into()));
    }
    if x == y || !phi.are_linked(x, y, tau, other)? {
        return Err(RecolorError::Precondition(format!(
            "{x} and {y} are not ({tau},{other})-linked"
        )));
    }
    let rv1 = g.edge_between(seq.center, v1).expect("τ-sequence edge");
    if !phi.chain_at(x, tau, other)?.contains_edge(rv1) {
        return Err(RecolorError::Precondition("the chain avoids rv1".into()));
    }
    let mut d = Derivation::new(phi);
    if !seq.shift_eligible(phi) {
        return Err(RecolorError::NotEligible("sequence cannot be shifted".into()));
    }
    d.shift(seq.center, &seq.vertices)?;
    let after = &d.current;
    let meets = |z: Vertex| -> Result<bool, RecolorError> { Ok(after.chain_at(z, tau, other)?.contains(v1)) };
    let (xm, ym) = (meets(x)?, meets(y)?);
    Ok(Unlinked {
        x_meets_v1: xm,
        y_meets_v1: ym,
        coloring: d.current,
        transcript: d.transcript,
    })
}
