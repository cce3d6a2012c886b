use super::{grow_within, FanError, Multifan};
use crate::coloring::PartialEdgeColoring;
use serde::Serialize;

/// How much of a fan a recolouring preserved, weakest first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Stability {
    #[serde(rename = "none")]
    None,
    /// `V(F)` still spans a multifan with the same `φ̄(s1)` and the same
    /// missing colours off `r`.
    #[serde(rename = "V(F-r)-stable")]
    VFMinusR,
    /// As above, and `r` misses the same colours.
    #[serde(rename = "V(F)-stable")]
    VF,
    /// Missing sets on `V(F)` and colours on `E(F)` unchanged.
    #[serde(rename = "F-stable")]
    F,
}

impl Stability {
    pub fn as_str(self) -> &'static str {
        match self {
            Stability::None => "none",
            Stability::VFMinusR => "V(F-r)-stable",
            Stability::VF => "V(F)-stable",
            Stability::F => "F-stable",
        }
    }
}

/// Whether the vertices of `fan` span a multifan at its center under `phi`.
pub fn spans_multifan(phi: &PartialEdgeColoring, fan: &Multifan) -> bool {
    if phi.uncolored() != Some(fan.uncolored_edge) {
        return false;
    }
    let grown = grow_within(phi, fan.center, fan.uncolored_edge, fan.s1(), |y| fan.sequence.contains(&y));
    grown.len() == fan.len()
}

/// Strongest stability label of `new` with respect to `old` and `fan`.
pub fn stability_class(
    new: &PartialEdgeColoring,
    old: &PartialEdgeColoring,
    fan: &Multifan,
) -> Result<Stability, FanError> {
    if new.k() != old.k()
        || new.uncolored() != old.uncolored()
        || new.graph().fingerprint() != old.graph().fingerprint()
        || new.graph() != old.graph()
    {
        return Err(FanError::Mismatch);
    }
    let g = old.graph();
    let vs = fan.vertices();
    let same_missing = vs.iter().all(|&v| new.missing(v) == old.missing(v));
    let same_edges = fan.edges(g).iter().all(|&e| new.color(e) == old.color(e));
    if same_missing && same_edges {
        return Ok(Stability::F);
    }
    let weak = spans_multifan(new, fan)
        && new.missing(fan.s1()) == old.missing(fan.s1())
        && new.missing_union(&fan.sequence) == old.missing_union(&fan.sequence);
    if !weak {
        return Ok(Stability::None);
    }
    if new.missing(fan.center) == old.missing(fan.center) {
        Ok(Stability::VF)
    } else {
        Ok(Stability::VFMinusR)
    }
}
