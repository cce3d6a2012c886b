use super::tau::is_candidate;
use super::{build_tau_sequence, is_avoiding, Derivation, RecolorError, Step, TauKind, TauSequence, Transcript};
use crate::coloring::{Color, ColorSet, PartialEdgeColoring};
use crate::fan::{grow_within, inducing_map, stability_class, typical_form, Multifan, Stability};
use crate::graph::Vertex;
use serde::Serialize;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

/// The seven statements about a vertex `x` off `N[r]` and a colour τ off
/// the fan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TauItem {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    II,
    #[serde(rename = "iii")]
    III,
    #[serde(rename = "iv")]
    IV,
    #[serde(rename = "v")]
    V,
    #[serde(rename = "vi")]
    VI,
    #[serde(rename = "vii")]
    VII,
}

impl TauItem {
    pub const ALL: [TauItem; 7] = [
        TauItem::I,
        TauItem::II,
        TauItem::III,
        TauItem::IV,
        TauItem::V,
        TauItem::VI,
        TauItem::VII,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TauItem::I => "i",
            TauItem::II => "ii",
            TauItem::III => "iii",
            TauItem::IV => "iv",
            TauItem::V => "v",
            TauItem::VI => "vi",
            TauItem::VII => "vii",
        }
    }

    /// Items that assume `τ ∈ φ̄(x)`.
    pub fn needs_tau_at_x(self) -> bool {
        matches!(self, TauItem::I | TauItem::II | TauItem::VII)
    }

    /// Stability the new colouring must have.
    pub fn stability(self) -> Stability {
        match self {
            TauItem::I => Stability::F,
            TauItem::II | TauItem::III | TauItem::IV => Stability::VFMinusR,
            TauItem::V | TauItem::VI | TauItem::VII => Stability::VF,
        }
    }

    /// Colours no Kempe change may use (`k` stands for Δ).
    pub fn avoided(self, tau: Color, k: Color) -> ColorSet {
        let v: &[Color] = match self {
            TauItem::I => &[],
            TauItem::II => &[k],
            TauItem::III => &[tau, k],
            TauItem::IV => &[2, tau, k],
            TauItem::V => &[1, tau],
            TauItem::VI | TauItem::VII => &[1, tau, k],
        };
        v.iter().copied().collect()
    }

    /// The item's exception, read off a τ-sequence and the inducer of its
    /// terminal colour.
    fn excepted(self, seq: &TauSequence, k: Color, inducer: Option<Color>) -> bool {
        let TauKind::B { terminal: g } = seq.kind else {
            return false;
        };
        match self {
            TauItem::I => false,
            TauItem::II | TauItem::III => g == k,
            TauItem::IV => g == 2 || g == k,
            TauItem::V => g == 1,
            TauItem::VI | TauItem::VII => g == 1 || g == k || inducer == Some(2),
        }
    }
}

impl fmt::Display for TauItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TauItem {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        TauItem::ALL
            .into_iter()
            .find(|i| i.as_str() == s)
            .ok_or_else(|| format!("unknown item '{s}'"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum WitnessStatus {
    /// A colouring with the required properties was built and checked.
    Witness,
    /// The exception holds, at the start or after a checked recolouring.
    Excluded,
    /// Every reachable colouring was tried without success.
    Fail,
    /// The search budget ran out first.
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessMethod {
    /// The start colouring already qualifies.
    Identity,
    /// The case analysis of the proof.
    Construction,
    /// Breadth-first search over admissible swaps and shifts.
    Search,
}

#[derive(Clone, Debug, Serialize)]
pub struct TauWitness {
    pub item: TauItem,
    pub x: Vertex,
    pub tau: Color,
    pub sequence: TauSequence,
    pub status: WitnessStatus,
    pub method: Option<WitnessMethod>,
    /// The final colouring, absent for FAIL and UNKNOWN.
    pub coloring: Option<PartialEdgeColoring>,
    pub transcript: Transcript,
    pub stability: Option<Stability>,
    pub avoided: ColorSet,
    /// For EXCLUDED: whether the exception was reached by recolouring
    /// rather than holding at the start.
    pub exception_reached: bool,
    /// Colourings looked at by the search.
    pub examined: usize,
    pub reason: Option<String>,
}

struct Ctx<'a> {
    item: TauItem,
    phi: &'a PartialEdgeColoring,
    fan: &'a Multifan,
    x: Vertex,
    tau: Color,
    k: Color,
    avoid: ColorSet,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Witness(Stability),
    Exception(Stability),
    No,
}

impl Ctx<'_> {
    fn unlinked(&self, p: &PartialEdgeColoring, a: Color, b: Color) -> bool {
        let m = p.missing(self.x);
        (m.contains(a) || m.contains(b))
            && p.chain_at(self.x, a, b).map(|c| !c.contains(self.fan.s1())).unwrap_or(false)
    }

    fn property(&self, p: &PartialEdgeColoring) -> bool {
        let (tau, k, x) = (self.tau, self.k, self.x);
        match self.item {
            TauItem::I => p.missing(x).contains(1),
            TauItem::II => !p.missing(self.fan.center).is_disjoint(p.missing(x)),
            TauItem::III | TauItem::IV | TauItem::VI => self.unlinked(p, tau, k),
            TauItem::V => self.unlinked(p, tau, k) || self.unlinked(p, 2, tau),
            TauItem::VII => self.unlinked(p, 2, tau),
        }
    }

    /// The exception evaluated on `p`, with the fan vertices regrown.
    fn exception_at(&self, p: &PartialEdgeColoring) -> bool {
        let f = self.fan;
        let fan = grow_within(p, f.center, f.uncolored_edge, f.s1(), |y| f.contains(y));
        let Ok(seq) = build_tau_sequence(p, &fan, self.tau) else {
            return false;
        };
        let inducer = inducing_map(p, &fan)
            .ok()
            .and_then(|m| m.inducer_of(seq.terminal_color()));
        self.item.excepted(&seq, self.k, inducer)
    }

    fn evaluate(&self, p: &PartialEdgeColoring, t: &Transcript) -> Outcome {
        if !is_avoiding(t, self.avoid) {
            return Outcome::No;
        }
        let st = match stability_class(p, self.phi, self.fan) {
            Ok(s) if s >= self.item.stability() => s,
            _ => return Outcome::No,
        };
        if self.property(p) {
            Outcome::Witness(st)
        } else if self.exception_at(p) {
            Outcome::Exception(st)
        } else {
            Outcome::No
        }
    }
}

/// Builds a colouring for one item at `(x, τ)`.
///
/// `phi` must be typical for `fan` and the fan maximum; the caller vouches
/// for maximality. The exception is checked first, then the start
/// colouring, then the case analysis (A, B, C and the terminal colour).
/// If that does not verify, a breadth-first search over Kempe changes
/// avoiding the item's colours and eligible shiftings runs for up to
/// `budget` colourings.
pub fn witness_tau_item(
    item: TauItem,
    phi: &PartialEdgeColoring,
    fan: &Multifan,
    x: Vertex,
    tau: Color,
    budget: usize,
) -> Result<TauWitness, RecolorError> {
    let g = phi.graph();
    let r = fan.center;
    fan.validate(phi)?;
    if fan.typical.is_none() || typical_form(phi, fan).is_none() {
        return Err(RecolorError::NotTypical);
    }
    if x >= g.n() || x == r || g.has_edge(r, x) {
        return Err(RecolorError::Precondition(format!("vertex {x} lies in N[r]")));
    }
    let k = phi.k();
    let mx = phi.missing(x);
    if !mx.contains(tau) && !mx.contains(k) {
        return Err(RecolorError::Precondition(format!("vertex {x} misses neither {tau} nor {k}")));
    }
    if item.needs_tau_at_x() && !mx.contains(tau) {
        return Err(RecolorError::Precondition(format!("vertex {x} does not miss {tau}")));
    }
    let seq = build_tau_sequence(phi, fan, tau)?;
    let ctx = Ctx {
        item,
        phi,
        fan,
        x,
        tau,
        k,
        avoid: item.avoided(tau, k),
    };
    let mut out = TauWitness {
        item,
        x,
        tau,
        sequence: seq.clone(),
        status: WitnessStatus::Excluded,
        method: None,
        coloring: None,
        transcript: Transcript::default(),
        stability: None,
        avoided: ctx.avoid,
        exception_reached: false,
        examined: 0,
        reason: None,
    };
    if ctx.exception_at(phi) {
        return Ok(out);
    }
    let accept = |out: &mut TauWitness, d: Derivation, m: WitnessMethod| -> bool {
        let (status, s) = match ctx.evaluate(&d.current, &d.transcript) {
            Outcome::No => return false,
            Outcome::Witness(s) => (WitnessStatus::Witness, s),
            Outcome::Exception(s) => (WitnessStatus::Excluded, s),
        };
        out.exception_reached = status == WitnessStatus::Excluded;
        out.status = status;
        out.method = Some(m);
        out.stability = Some(s);
        out.coloring = Some(d.current);
        out.transcript = d.transcript;
        true
    };
    if accept(&mut out, Derivation::new(phi), WitnessMethod::Identity) {
        return Ok(out);
    }
    let built = construct(&ctx, &seq);
    let note = match built {
        Ok(d) => {
            if accept(&mut out, d, WitnessMethod::Construction) {
                return Ok(out);
            }
            "construction did not verify".to_string()
        }
        Err(e) => format!("construction stopped: {e}"),
    };
    let (found, examined, exhausted) = search(&ctx, budget);
    out.examined = examined;
    if let Some(d) = found {
        if accept(&mut out, d, WitnessMethod::Search) {
            out.reason = Some(note);
            return Ok(out);
        }
    }
    out.status = if exhausted {
        WitnessStatus::Fail
    } else {
        WitnessStatus::Unknown
    };
    out.reason = Some(format!(
        "{note}; search {} after {examined} colourings",
        if exhausted { "exhausted" } else { "hit the budget" }
    ));
    Ok(out)
}

fn construct(ctx: &Ctx, seq: &TauSequence) -> Result<Derivation, RecolorError> {
    let mut d = Derivation::new(ctx.phi);
    let seq = match seq.kind {
        TauKind::C { index } => {
            // make one of v_{i-1}, v_t miss the colour that closes the chain
            let ti = seq.terminal_color();
            let (a, b) = match ctx.item {
                TauItem::I | TauItem::II | TauItem::III | TauItem::IV => (1, ti),
                TauItem::V => (ti, ctx.k),
                TauItem::VI | TauItem::VII => (2, ti),
            };
            let r = ctx.fan.center;
            let ends = [seq.vertices[index - 2], seq.last()];
            let mut pick = None;
            for z in ends {
                if !ctx.phi.chain_at(z, a, b)?.contains(r) {
                    pick = Some(z);
                    break;
                }
            }
            let z = pick.ok_or_else(|| RecolorError::NotEligible("both ends linked with r".into()))?;
            d.swap(z, a, b)?;
            let next = build_tau_sequence(&d.current, ctx.fan, ctx.tau)?;
            if !matches!(next.kind, TauKind::B { .. }) {
                return Err(RecolorError::NotEligible("swap did not give a type B sequence".into()));
            }
            next
        }
        _ => seq.clone(),
    };
    finish(ctx, &mut d, &seq)?;
    Ok(d)
}

/// Type A or B, starting from `d.current`.
fn finish(ctx: &Ctx, d: &mut Derivation, seq: &TauSequence) -> Result<(), RecolorError> {
    let (r, x, tau, k) = (ctx.fan.center, ctx.x, ctx.tau, ctx.k);
    let vt = seq.last();
    match seq.kind {
        TauKind::A => match ctx.item {
            TauItem::I | TauItem::II => {
                if !d.current.are_linked(x, r, 1, tau)? {
                    d.swap(x, 1, tau)?;
                } else {
                    d.swap(vt, 1, tau)?;
                    d.shift(r, &seq.vertices)?;
                    if ctx.item == TauItem::I {
                        d.rename(1, tau)?;
                    }
                }
            }
            _ => {
                d.shift(r, &seq.vertices)?;
            }
        },
        TauKind::B { terminal: g } => match ctx.item {
            TauItem::I | TauItem::II | TauItem::III | TauItem::IV => {
                if g != 1 {
                    d.swap(vt, 1, g)?;
                }
                d.shift(r, &seq.vertices)?;
                if ctx.item == TauItem::I {
                    d.rename(1, tau)?;
                }
            }
            TauItem::V => {
                let inducer = inducing_map(&d.current, ctx.fan)?.inducer_of(g);
                let (first, second) = if inducer == Some(2) { ((g, k), (tau, k)) } else { ((2, g), (2, tau)) };
                if first.0 != first.1 {
                    d.swap(vt, first.0, first.1)?;
                }
                d.swap(vt, second.0, second.1)?;
                d.shift(r, &seq.vertices)?;
            }
            TauItem::VI | TauItem::VII => {
                // a Δ-inducing terminal colour becomes 2, which is excepted
                d.swap(vt, 2, g)?;
            }
        },
        TauKind::C { .. } => return Err(RecolorError::NotEligible("type C left after reduction".into())),
    }
    Ok(())
}

/// Breadth-first search from `ctx.phi`. Returns the first colouring that
/// verifies, preferring one with the property over one where only the
/// exception holds.
fn search(ctx: &Ctx, budget: usize) -> (Option<Derivation>, usize, bool) {
    let phi = ctx.phi;
    let k = phi.k();
    let n = phi.graph().n();
    let r = ctx.fan.center;
    // (parent, step, colouring)
    let mut nodes: Vec<(usize, Option<Step>, PartialEdgeColoring)> = vec![(usize::MAX, None, phi.clone())];
    let mut seen: HashSet<Vec<Option<Color>>> = HashSet::from([phi.assignment().to_vec()]);
    let mut queue = VecDeque::from([0usize]);
    let mut fallback = None;
    let rebuild = |nodes: &[(usize, Option<Step>, PartialEdgeColoring)], mut i: usize| {
        let mut steps = Vec::new();
        let end = nodes[i].2.clone();
        while let Some(s) = &nodes[i].1 {
            steps.push(s.clone());
            i = nodes[i].0;
        }
        steps.reverse();
        Derivation {
            start: phi.clone(),
            current: end,
            transcript: Transcript { steps },
        }
    };
    while let Some(i) = queue.pop_front() {
        if i > 0 {
            // transcripts along the tree only hold admissible steps
            let d = rebuild(&nodes, i);
            match ctx.evaluate(&d.current, &d.transcript) {
                Outcome::Witness(_) => return (Some(d), nodes.len(), false),
                Outcome::Exception(_) if fallback.is_none() => fallback = Some(d),
                _ => {}
            }
        }
        if nodes.len() >= budget {
            return (fallback, nodes.len(), false);
        }
        let cur = nodes[i].2.clone();
        let mut steps = Vec::new();
        for a in 1..=k {
            for b in a + 1..=k {
                if ctx.avoid.contains(a) || ctx.avoid.contains(b) {
                    continue;
                }
                let mut covered = vec![false; n];
                for v in 0..n {
                    if covered[v] {
                        continue;
                    }
                    let Ok(chain) = cur.chain_at(v, a, b) else { continue };
                    for &w in &chain.vertices {
                        covered[w] = true;
                    }
                    if !chain.is_trivial() {
                        steps.push(Step::Swap { colors: [a, b], anchor: v });
                    }
                }
            }
        }
        let fan_colors = cur.missing_union(&ctx.fan.vertices());
        for t in 1..=k {
            if fan_colors.contains(t) {
                continue;
            }
            if let Ok(s) = build_tau_sequence(&cur, ctx.fan, t) {
                if s.shift_eligible(&cur) && s.vertices.iter().all(|&v| is_candidate(&cur, ctx.fan, v)) {
                    steps.push(Step::Shift {
                        center: r,
                        range: s.vertices.clone(),
                    });
                }
            }
        }
        for s in steps {
            let Ok(next) = s.apply(&cur) else { continue };
            if seen.insert(next.assignment().to_vec()) {
                nodes.push((i, Some(s), next));
                queue.push_back(nodes.len() - 1);
            }
        }
    }
    (fallback, nodes.len(), true)
}
