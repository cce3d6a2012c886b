use super::{FanError, Multifan};
use crate::coloring::{Color, ColorMap, ColorSet, PartialEdgeColoring};
use crate::graph::Vertex;
use serde::Serialize;

/// Shape of a typical multifan: `1 ∈ φ̄(r)`, `φ̄(s1) = {2, Δ}`, the
/// 2-inducing run `s2..s_α` with `φ(rs_i) = i`, `φ̄(s_i) = i + 1`, then the
/// Δ-inducing run `s_{α+1}..s_β` starting with `φ(rs_{α+1}) = Δ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypicalForm {
    pub alpha: usize,
    pub beta: usize,
    pub two_inducing: Vec<Vertex>,
    pub delta_inducing: Vec<Vertex>,
}

/// Follows `c`, `φ̄(y1)`, `φ̄(y2)`, ... along fan edges at `r`.
fn run_from(phi: &PartialEdgeColoring, fan: &Multifan, c: Color) -> Vec<Vertex> {
    let mut out = Vec::new();
    let mut c = Some(c);
    while let Some(col) = c {
        match phi.neighbor_via(fan.center, col) {
            Some(y) if fan.sequence[1..].contains(&y) && !out.contains(&y) => {
                out.push(y);
                c = phi.missing(y).only();
            }
            _ => break,
        }
    }
    out
}

fn check_shape(phi: &PartialEdgeColoring, fan: &Multifan) -> Result<(), FanError> {
    let g = phi.graph();
    let vs = fan.vertices();
    if let Some((x, y, c)) = phi.elementary_clash(&vs) {
        return Err(FanError::NotElementary(x, y, c));
    }
    let m1 = phi.missing(fan.s1()).len();
    if m1 != 2 {
        return Err(FanError::BadMissingCount(m1));
    }
    let delta = g.max_degree();
    for &s in &fan.sequence[1..] {
        if g.degree(s) + 1 != delta {
            return Err(FanError::BadDegree(s, g.degree(s), delta - 1));
        }
    }
    Ok(())
}

/// Reads the typical form off a fan, if it has one.
pub fn typical_form(phi: &PartialEdgeColoring, fan: &Multifan) -> Option<TypicalForm> {
    let k = phi.k();
    let g = phi.graph();
    if !phi.missing(fan.center).contains(1) || phi.missing(fan.s1()) != ColorSet::from_iter([2, k]) {
        return None;
    }
    let p = fan.len();
    let edge_color = |s: Vertex| g.edge_between(fan.center, s).and_then(|e| phi.color(e));
    let alpha = (2..=p)
        .find(|&i| edge_color(fan.sequence[i - 1]) == Some(k))
        .map_or(p, |i| i - 1);
    for i in 2..=p {
        let s = fan.sequence[i - 1];
        let col = edge_color(s)?;
        let (want_edge, want_missing) = if i == alpha + 1 {
            (k, alpha as Color + 2)
        } else {
            (i as Color, i as Color + 1)
        };
        if col != want_edge || phi.missing(s) != ColorSet::single(want_missing) {
            return None;
        }
    }
    Some(TypicalForm {
        alpha,
        beta: p,
        two_inducing: fan.sequence[1..alpha].to_vec(),
        delta_inducing: fan.sequence[alpha..].to_vec(),
    })
}

/// Relabels colours and reorders the fan into typical form.
///
/// Needs `V(F)` elementary, `|φ̄(s1)| = 2` and `d(s_i) = Δ − 1` for
/// `i ≥ 2`. The smallest colour of `φ̄(r)` becomes 1, the smaller colour
/// of `φ̄(s1)` becomes 2 and the larger one the top colour. Colours outside
/// the fan keep their relative order.
pub fn normalize_typical(
    phi: &PartialEdgeColoring,
    fan: &Multifan,
) -> Result<(PartialEdgeColoring, Multifan, ColorMap), FanError> {
    check_shape(phi, fan)?;
    let k = phi.k();
    let mut s1_colors = phi.missing(fan.s1()).iter();
    let (a, b) = (s1_colors.next().unwrap(), s1_colors.next().unwrap());
    let two = run_from(phi, fan, a);
    let top = run_from(phi, fan, b);
    if two.len() + top.len() + 1 != fan.len() {
        return Err(FanError::Invalid("fan vertices not reached from φ̄(s1)".into()));
    }
    let alpha = 1 + two.len();
    let r0 = phi.missing(fan.center).first().expect("the center misses a colour");
    let mut images: Vec<Color> = vec![0; k as usize + 1];
    images[r0 as usize] = 1;
    images[a as usize] = 2;
    images[b as usize] = k;
    for (j, &y) in two.iter().enumerate() {
        images[phi.missing(y).only().unwrap() as usize] = j as Color + 3;
    }
    for (j, &z) in top.iter().enumerate() {
        images[phi.missing(z).only().unwrap() as usize] = (alpha + 2 + j) as Color;
    }
    let used: ColorSet = images.iter().copied().filter(|&c| c != 0).collect();
    let mut free = ColorSet::full(k).difference(used).iter();
    for img in images.iter_mut().skip(1) {
        if *img == 0 {
            *img = free.next().expect("a bijection exists");
        }
    }
    let map = ColorMap::from_images(&images[1..])?;
    let out = phi.relabel(&map)?;
    let mut sequence = vec![fan.s1()];
    sequence.extend(two);
    sequence.extend(top);
    let mut new_fan = Multifan {
        sequence,
        ..fan.clone()
    }
    .refreshed(&out);
    let form = typical_form(&out, &new_fan)
        .ok_or_else(|| FanError::Invalid("relabelled fan is not typical".into()))?;
    new_fan.typical = Some(form);
    Ok((out, new_fan, map))
}

/// One missing colour of a fan vertex and the colour of `φ̄(s1)` that
/// induces it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedColor {
    pub color: Color,
    pub vertex: Vertex,
    pub inducer: Color,
    /// `s1, ..., vertex` along the inducing chain.
    pub sequence: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducingMap {
    pub entries: Vec<InducedColor>,
}

impl InducingMap {
    pub fn get(&self, c: Color) -> Option<&InducedColor> {
        self.entries.iter().find(|e| e.color == c)
    }

    pub fn inducer_of(&self, c: Color) -> Option<Color> {
        self.get(c).map(|e| e.inducer)
    }

    /// Colours of `φ̄(F − r)` induced by `inducer`.
    pub fn induced_by(&self, inducer: Color) -> ColorSet {
        self.entries
            .iter()
            .filter(|e| e.inducer == inducer)
            .map(|e| e.color)
            .collect()
    }
}

/// Tags every colour of `φ̄(F − r)` with its inducing colour in `φ̄(s1)`.
/// `V(F)` must be elementary.
pub fn inducing_map(phi: &PartialEdgeColoring, fan: &Multifan) -> Result<InducingMap, FanError> {
    if let Some((x, y, c)) = phi.elementary_clash(&fan.vertices()) {
        return Err(FanError::NotElementary(x, y, c));
    }
    let g = phi.graph();
    let p = fan.len();
    // (inducer, chain) per fan position
    let mut roots: Vec<(Option<Color>, Vec<Vertex>)> = vec![(None, vec![fan.s1()])];
    for i in 1..p {
        let s = fan.sequence[i];
        let c = phi
            .color(g.edge_between(fan.center, s).expect("fan edge"))
            .ok_or_else(|| FanError::Invalid(format!("edge to {s} is uncoloured")))?;
        let j = (0..i)
            .find(|&j| phi.missing(fan.sequence[j]).contains(c))
            .ok_or_else(|| FanError::Invalid(format!("edge to {s} violates F1")))?;
        let inducer = roots[j].0.unwrap_or(c);
        let mut chain = roots[j].1.clone();
        chain.push(s);
        roots.push((Some(inducer), chain));
    }
    let mut entries = Vec::new();
    for (i, &s) in fan.sequence.iter().enumerate() {
        for c in phi.missing(s).iter() {
            entries.push(InducedColor {
                color: c,
                vertex: s,
                inducer: roots[i].0.unwrap_or(c),
                sequence: roots[i].1.clone(),
            });
        }
    }
    entries.sort_by_key(|e| e.color);
    Ok(InducingMap { entries })
}
