use super::{shift, RecolorError};
use crate::coloring::{Color, ColorMap, ColorSet, PartialEdgeColoring};
use crate::graph::Vertex;
use serde::{Deserialize, Serialize};

/// One recolouring step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase")]
pub enum Step {
    /// Kempe change on the chain through `anchor`.
    Swap { colors: [Color; 2], anchor: Vertex },
    /// `φ(rv) → φ̄(v)` for every `v` in `range`, all at once.
    Shift { center: Vertex, range: Vec<Vertex> },
    /// Renames colours globally; pairs are `[from, to]`.
    Relabel { bijection: Vec<[Color; 2]> },
}

impl Step {
    pub fn is_kempe(&self) -> bool {
        matches!(self, Step::Swap { .. })
    }

    pub fn apply(&self, phi: &PartialEdgeColoring) -> Result<PartialEdgeColoring, RecolorError> {
        match self {
            Step::Swap { colors, anchor } => Ok(phi.swap_at(*anchor, colors[0], colors[1])?),
            Step::Shift { center, range } => shift(phi, *center, range),
            Step::Relabel { bijection } => Ok(phi.relabel(&map_of(phi.k(), bijection)?)?),
        }
    }
}

fn map_of(k: u8, pairs: &[[Color; 2]]) -> Result<ColorMap, RecolorError> {
    let mut images: Vec<Color> = (1..=k).collect();
    for &[a, b] in pairs {
        if a == 0 || a > k {
            return Err(RecolorError::Precondition(format!("colour {a} outside the palette")));
        }
        images[a as usize - 1] = b;
    }
    Ok(ColorMap::from_images(&images)?)
}

/// An ordered list of steps.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Transcript {
    pub steps: Vec<Step>,
}

/// Avoidance of a colour set, with the non-Kempe steps counted apart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Avoidance {
    pub avoiding: bool,
    pub non_kempe_steps: usize,
}

impl Transcript {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn replay(&self, start: &PartialEdgeColoring) -> Result<PartialEdgeColoring, RecolorError> {
        let mut cur = start.clone();
        for s in &self.steps {
            cur = s.apply(&cur)?;
        }
        Ok(cur)
    }

    pub fn avoidance(&self, s: ColorSet) -> Avoidance {
        Avoidance {
            avoiding: is_avoiding(self, s),
            non_kempe_steps: self.steps.iter().filter(|x| !x.is_kempe()).count(),
        }
    }
}

/// No Kempe change of the transcript uses a colour of `s`. Shifts and
/// relabellings are not Kempe changes and are not looked at.
pub fn is_avoiding(t: &Transcript, s: ColorSet) -> bool {
    t.steps.iter().all(|step| match step {
        Step::Swap { colors, .. } => !s.contains(colors[0]) && !s.contains(colors[1]),
        _ => true,
    })
}

/// A start colouring, the current one and the steps in between.
#[derive(Clone, Debug)]
pub struct Derivation {
    pub start: PartialEdgeColoring,
    pub current: PartialEdgeColoring,
    pub transcript: Transcript,
}

impl Derivation {
    pub fn new(start: &PartialEdgeColoring) -> Self {
        Derivation {
            start: start.clone(),
            current: start.clone(),
            transcript: Transcript::default(),
        }
    }

    pub fn step(&mut self, s: Step) -> Result<&mut Self, RecolorError> {
        self.current = s.apply(&self.current)?;
        self.transcript.steps.push(s);
        Ok(self)
    }

    pub fn swap(&mut self, anchor: Vertex, a: Color, b: Color) -> Result<&mut Self, RecolorError> {
        self.step(Step::Swap { colors: [a, b], anchor })
    }

    pub fn shift(&mut self, center: Vertex, range: &[Vertex]) -> Result<&mut Self, RecolorError> {
        self.step(Step::Shift {
            center,
            range: range.to_vec(),
        })
    }

    /// Exchanges two colours everywhere.
    pub fn rename(&mut self, a: Color, b: Color) -> Result<&mut Self, RecolorError> {
        self.step(Step::Relabel {
            bijection: vec![[a, b], [b, a]],
        })
    }
}
