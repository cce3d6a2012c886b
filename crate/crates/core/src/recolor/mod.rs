//! τ-sequences at a light center, shifting, recolouring transcripts and
//! the constructive witnesses built from them.

mod shift;
mod tau;
mod transcript;
mod verify;
mod witness;

pub use shift::{shift, shift_tau, unlink_via_shifting, Unlinked};
pub use tau::{all_tau_sequences, build_tau_sequence, TauKind, TauSequence};
pub use transcript::{is_avoiding, Avoidance, Derivation, Step, Transcript};
pub use verify::{verify_rs1_linkage, verify_tau_sequences, verify_tau_witnesses};
pub use witness::{witness_tau_item, TauItem, TauWitness, WitnessMethod, WitnessStatus};

use crate::coloring::{Color, ColoringError};
use crate::fan::FanError;
use crate::graph::Vertex;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecolorError {
    #[error("colour {0} is missing somewhere on the fan")]
    TauInFan(Color),
    #[error("edge of colour {color} at the center leads to Δ-vertex {vertex}; the fan is not maximum")]
    MaximalityViolation { vertex: Vertex, color: Color },
    #[error("vertex {0} is not a (Δ−1)-neighbour of the center off the fan")]
    NotCandidate(Vertex),
    #[error("vertex {0} is not adjacent to the center")]
    NotNeighbor(Vertex),
    #[error("edge from the center to {0} is uncoloured")]
    UncoloredSpoke(Vertex),
    #[error("vertex {0} misses {1} colours, expected 1")]
    NotSingleton(Vertex, usize),
    #[error("vertex {0} repeated in the range")]
    Repeated(Vertex),
    #[error("shifting leaves colour {color} twice at vertex {vertex}")]
    Improper { vertex: Vertex, color: Color },
    #[error("not eligible: {0}")]
    NotEligible(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("fan is not in typical form")]
    NotTypical,
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Fan(#[from] FanError),
}

#[cfg(test)]
mod tests;
