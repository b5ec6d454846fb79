//! State-sum evaluation of colored Morse words.

mod weights;

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::diagram::{Boundary, Color, Coloring, ComponentColor, Diagram, DiagramError, Slice, Strand};
use crate::palette::{d, Laurent, PaletteError, PaletteSpec, Scalar};

pub use weights::WeightTable;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Palette(#[from] PaletteError),
    #[error("expected a 1-1 tangle")]
    NotTangle,
    #[error("expected a closed diagram")]
    NotClosed,
    #[error("the diagram is empty")]
    Empty,
    #[error("the tangle does not act as a scalar: {0}")]
    NotScalar(String),
    #[error("component `{0}` carries a Kirby color; use the Kirby evaluation")]
    KirbyColor(String),
    #[error("no component can be cut open")]
    NoCut,
    #[error("diagram too wide ({0} strands)")]
    TooWide(usize),
}

/// Sparse vector over basis states; bit `i` is the state of strand `i`
/// (0 = e0, 1 = e1). Zero amplitudes are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateVector {
    width: usize,
    amps: BTreeMap<u64, Laurent>,
}

impl StateVector {
    pub fn basis(width: usize, bits: u64, one: Laurent) -> Self {
        let mut amps = BTreeMap::new();
        amps.insert(bits, one);
        Self { width, amps }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn amplitudes(&self) -> &BTreeMap<u64, Laurent> {
        &self.amps
    }

    pub fn get(&self, bits: u64) -> Option<&Laurent> {
        self.amps.get(&bits)
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    fn add(&mut self, bits: u64, amp: Laurent) {
        if amp.is_zero() {
            return;
        }
        match self.amps.entry(bits) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(amp);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&amp);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }
}

fn bit(bits: u64, i: usize) -> u64 {
    (bits >> i) & 1
}

/// Applies one slice. `below` are the strands under the slice and `colors`
/// is indexed by component.
pub fn transfer(table: &WeightTable, s: &Slice, below: &[Strand], colors: &[Color], v: &StateVector) -> StateVector {
    debug_assert_eq!(v.width, below.len());
    let mut out = StateVector { width: v.width, amps: BTreeMap::new() };
    match *s {
        Slice::Cup { pos: p, rot, comp } => {
            out.width += 2;
            let [w0, w1] = table.cup(rot, &colors[comp]);
            for (&bits, amp) in &v.amps {
                let low = bits & ((1u64 << p) - 1);
                let base = low | ((bits >> p) << (p + 2));
                out.add(base, amp.mul(&w0));
                out.add(base | (0b11 << p), amp.mul(&w1));
            }
        }
        Slice::Cap { pos: p, rot } => {
            out.width -= 2;
            let [w0, w1] = table.cap(rot, &colors[below[p].comp]);
            for (&bits, amp) in &v.amps {
                let (a, b) = (bit(bits, p), bit(bits, p + 1));
                if a != b {
                    continue;
                }
                let low = bits & ((1u64 << p) - 1);
                let rest = low | ((bits >> (p + 2)) << p);
                out.add(rest, amp.mul(if a == 0 { &w0 } else { &w1 }));
            }
        }
        Slice::Cross { pos: p, sign } => {
            let m = table.crossing(sign, &colors[below[p].comp], &colors[below[p + 1].comp]);
            for (&bits, amp) in &v.amps {
                let input = (bit(bits, p) << 1 | bit(bits, p + 1)) as usize;
                let cleared = bits & !(0b11 << p);
                for (output, w) in m[input].iter().enumerate() {
                    if let Some(w) = w {
                        let (a, b) = ((output >> 1) as u64, (output & 1) as u64);
                        out.add(cleared | (a << p) | (b << (p + 1)), amp.mul(w));
                    }
                }
            }
        }
    }
    out
}

fn plain_colors(d: &Diagram, coloring: &Coloring) -> Result<Vec<Color>, EvalError> {
    crate::diagram::check_coloring(d, coloring)?;
    d.components()
        .iter()
        .map(|c| match &coloring[c] {
            ComponentColor::Plain(col) => Ok(col.clone()),
            ComponentColor::Kirby(_) => Err(EvalError::KirbyColor(c.clone())),
        })
        .collect()
}

/// State after every slice when `input` (0 or 1) is fed into a 1-1 tangle.
/// The tangle must already have only upward crossings.
pub fn trace_tangle(
    palette: &PaletteSpec,
    d: &Diagram,
    coloring: &Coloring,
    input: u64,
) -> Result<Vec<StateVector>, EvalError> {
    if d.is_closed() {
        return Err(EvalError::NotTangle);
    }
    let colors = plain_colors(d, coloring)?;
    let table = WeightTable::new(palette);
    let levels = d.levels();
    if let Some(w) = levels.iter().map(Vec::len).max().filter(|&w| w > 62) {
        return Err(EvalError::TooWide(w));
    }
    let mut v = StateVector::basis(1, input, table.one());
    let mut out = vec![v.clone()];
    for (s, below) in d.slices().iter().zip(&levels) {
        v = transfer(&table, s, below, &colors, &v);
        out.push(v.clone());
    }
    Ok(out)
}

/// The scalar by which a 1-1 tangle acts, checked on both basis vectors.
pub fn evaluate_tangle(palette: &PaletteSpec, d: &Diagram, coloring: &Coloring) -> Result<Laurent, EvalError> {
    if !matches!(d.boundary(), Boundary::Tangle { .. }) {
        return Err(EvalError::NotTangle);
    }
    let d = d.normalize_crossings();
    let mut lambda = Vec::new();
    for input in [0u64, 1] {
        let last = trace_tangle(palette, &d, coloring, input)?.pop().expect("at least the input");
        let diag = last.get(input).cloned().unwrap_or_else(|| WeightTable::new(palette).zero());
        if last.amps.keys().any(|&k| k != input) {
            return Err(EvalError::NotScalar(format!("e{input} has an off-diagonal image")));
        }
        lambda.push(diag);
    }
    if lambda[0] != lambda[1] {
        return Err(EvalError::NotScalar("e0 and e1 are scaled differently".into()));
    }
    Ok(lambda.swap_remove(0))
}

/// The invariant of a closed, plainly colored diagram, cut open along `cut`.
pub fn alexander(palette: &PaletteSpec, d: &Diagram, coloring: &Coloring, cut: &str) -> Result<Scalar, EvalError> {
    if !d.is_closed() {
        return Err(EvalError::NotClosed);
    }
    if d.components().is_empty() {
        return Err(EvalError::Empty);
    }
    plain_colors(d, coloring)?;
    let tangle = d.cut_open(cut)?;
    let lambda = evaluate_tangle(palette, &tangle, coloring)?;
    let t = &coloring[cut].color().mul;
    Ok(d_of(palette, t)?.mul_laurent(&lambda))
}

fn d_of(palette: &PaletteSpec, t: &crate::palette::GroupElement) -> Result<Scalar, PaletteError> {
    d(palette, t)
}

/// A component that can be cut: a plain one if possible.
fn choose_cut(d: &Diagram, coloring: &Coloring) -> Result<String, EvalError> {
    let outer = d.outer_components();
    let label = |i: usize| d.components()[i].clone();
    outer
        .iter()
        .find(|&&i| !coloring[&label(i)].is_kirby())
        .or(outer.first())
        .map(|&i| label(i))
        .ok_or(EvalError::NoCut)
}

/// Evaluation with Kirby colors: each `Omega(t, N)` component expands into
/// `d(t) (t, N) - d(t) (reversed, (t^-1, 2 - N))`, and the `2^r` plain
/// evaluations are summed. `cut` defaults to an outer component.
pub fn alexander_kirby(
    palette: &PaletteSpec,
    d: &Diagram,
    coloring: &Coloring,
    cut: Option<&str>,
) -> Result<Scalar, EvalError> {
    Ok(alexander_kirby_terms(palette, d, coloring, cut)?.0)
}

/// As [`alexander_kirby`], also returning the number of terms evaluated.
pub fn alexander_kirby_terms(
    palette: &PaletteSpec,
    d: &Diagram,
    coloring: &Coloring,
    cut: Option<&str>,
) -> Result<(Scalar, usize), EvalError> {
    if !d.is_closed() {
        return Err(EvalError::NotClosed);
    }
    if d.components().is_empty() {
        return Err(EvalError::Empty);
    }
    crate::diagram::check_coloring(d, coloring)?;
    let cut = match cut {
        Some(c) => {
            d.component_index(c)?;
            c.to_string()
        }
        None => choose_cut(d, coloring)?,
    };
    let kirby: Vec<&String> = d.components().iter().filter(|c| coloring[*c].is_kirby()).collect();
    let r = kirby.len();
    let mut prefactor = Scalar::one(palette);
    for c in &kirby {
        prefactor = prefactor.mul(&d_of(palette, &coloring[*c].color().mul)?);
    }
    let terms: Vec<Result<Scalar, EvalError>> = (0..1u64 << r)
        .into_par_iter()
        .map(|mask| {
            let mut diagram = d.clone();
            let mut colors = Coloring::new();
            for (label, col) in coloring {
                colors.insert(label.clone(), ComponentColor::Plain(col.color().clone()));
            }
            for (i, label) in kirby.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    diagram = diagram.reverse_component(label)?;
                    let c = coloring[*label].color();
                    colors.insert(
                        (*label).clone(),
                        ComponentColor::plain(c.mul.inv(), 2 - c.weight),
                    );
                }
            }
            let value = alexander(palette, &diagram, &colors, &cut)?;
            Ok(if mask.count_ones() % 2 == 1 { value.neg() } else { value })
        })
        .collect();
    let mut sum = Scalar::zero(palette);
    for t in terms {
        sum = sum.add(&t?);
    }
    Ok((sum.mul(&prefactor), 1 << r))
}
