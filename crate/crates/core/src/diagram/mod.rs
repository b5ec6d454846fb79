//! Morse-word diagrams of oriented framed links and 1-1 tangles.

mod builders;
mod format;
mod moves;

use std::collections::BTreeMap;
use std::fmt;

use crate::palette::GroupElement;

pub use builders::{hopf_with_twists, lens_chain, split_unknots, twist_region, unknot, HopfVariant};
pub use format::{parse_morse, parse_morse_with, render, MorseFile, Role};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orient {
    Up,
    Down,
}

impl Orient {
    pub fn flip(self) -> Self {
        match self {
            Orient::Up => Orient::Down,
            Orient::Down => Orient::Up,
        }
    }
}

/// Sense of rotation of a cup or cap: `>` is counterclockwise, `<` clockwise.
/// A counterclockwise cup runs down its left leg and up its right leg.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rot {
    Ccw,
    Cw,
}

impl Rot {
    pub fn flip(self) -> Self {
        match self {
            Rot::Ccw => Rot::Cw,
            Rot::Cw => Rot::Ccw,
        }
    }

    /// Orientations of the (left, right) legs of a cup.
    pub fn cup_legs(self) -> (Orient, Orient) {
        match self {
            Rot::Ccw => (Orient::Down, Orient::Up),
            Rot::Cw => (Orient::Up, Orient::Down),
        }
    }

    /// Orientations of the (left, right) strands entering a cap.
    pub fn cap_legs(self) -> (Orient, Orient) {
        match self {
            Rot::Ccw => (Orient::Down, Orient::Up),
            Rot::Cw => (Orient::Up, Orient::Down),
        }
    }

    /// The cup whose left leg has orientation `left`.
    pub fn for_cup(left: Orient) -> Self {
        match left {
            Orient::Down => Rot::Ccw,
            Orient::Up => Rot::Cw,
        }
    }

    /// The cap whose left strand has orientation `left`.
    pub fn for_cap(left: Orient) -> Self {
        match left {
            Orient::Down => Rot::Ccw,
            Orient::Up => Rot::Cw,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Rot::Ccw => '>',
            Rot::Cw => '<',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn from_int(s: i64) -> Option<Self> {
        match s {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// One elementary fragment. `pos` is the leftmost strand it touches.
///
/// Crossing signs are oriented-link signs; which strand passes over follows
/// from the sign and the two orientations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slice {
    Cup { pos: usize, rot: Rot, comp: usize },
    Cap { pos: usize, rot: Rot },
    Cross { pos: usize, sign: Sign },
}

impl Slice {
    pub fn pos(&self) -> usize {
        match *self {
            Slice::Cup { pos, .. } | Slice::Cap { pos, .. } | Slice::Cross { pos, .. } => pos,
        }
    }

    fn shifted(self, by: usize) -> Self {
        match self {
            Slice::Cup { pos, rot, comp } => Slice::Cup { pos: pos + by, rot, comp },
            Slice::Cap { pos, rot } => Slice::Cap { pos: pos + by, rot },
            Slice::Cross { pos, sign } => Slice::Cross { pos: pos + by, sign },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Strand {
    pub comp: usize,
    pub orient: Orient,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Boundary {
    Closed,
    /// One strand enters at the bottom and leaves at the top.
    Tangle { comp: usize, orient: Orient },
}

/// Whether the left strand passes over at a crossing with this sign.
pub fn left_is_over(left: Orient, right: Orient, sign: Sign) -> bool {
    (left == right) == (sign == Sign::Pos)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("slice {slice}: {msg}")]
    StrandCount { slice: usize, msg: String },
    #[error("slice {slice}: orientations do not match the {what}")]
    Orientation { slice: usize, what: &'static str },
    #[error("slice {slice}: cap joins strands of components `{a}` and `{b}`")]
    ComponentMismatch { slice: usize, a: String, b: String },
    #[error("top boundary has {found} strands but the diagram is declared {declared}")]
    BoundaryMismatch { found: usize, declared: &'static str },
    #[error("component `{0}` is not colored")]
    Uncolored(String),
    #[error("unknown component `{0}`")]
    UnknownComponent(String),
    #[error("duplicate component `{0}`")]
    DuplicateComponent(String),
    #[error("component `{0}` has an inadmissible multiplicity")]
    Inadmissible(String),
    #[error("component `{0}` does not appear in the diagram")]
    Unused(String),
    #[error("{0}")]
    Invalid(String),
}

/// A validated Morse word, read bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    components: Vec<String>,
    boundary: Boundary,
    slices: Vec<Slice>,
}

impl Diagram {
    pub fn new(components: Vec<String>, boundary: Boundary, slices: Vec<Slice>) -> Result<Self, DiagramError> {
        let d = Self { components, boundary, slices };
        d.validate()?;
        Ok(d)
    }

    pub fn components(&self) -> &[String] {
        &self.components
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn is_closed(&self) -> bool {
        self.boundary == Boundary::Closed
    }

    pub fn component_index(&self, label: &str) -> Result<usize, DiagramError> {
        self.components
            .iter()
            .position(|c| c == label)
            .ok_or_else(|| DiagramError::UnknownComponent(label.to_string()))
    }

    pub fn label(&self, comp: usize) -> &str {
        &self.components[comp]
    }

    fn bottom(&self) -> Vec<Strand> {
        match self.boundary {
            Boundary::Closed => Vec::new(),
            Boundary::Tangle { comp, orient } => vec![Strand { comp, orient }],
        }
    }

    /// Strands at every level; level `i` lies just below slice `i`.
    pub fn levels(&self) -> Vec<Vec<Strand>> {
        let mut out = Vec::with_capacity(self.slices.len() + 1);
        let mut cur = self.bottom();
        out.push(cur.clone());
        for s in &self.slices {
            apply_slice(&mut cur, s);
            out.push(cur.clone());
        }
        out
    }

    fn validate(&self) -> Result<(), DiagramError> {
        let mut seen = std::collections::BTreeSet::new();
        for c in &self.components {
            if !seen.insert(c) {
                return Err(DiagramError::DuplicateComponent(c.clone()));
            }
        }
        let n = self.components.len();
        if let Boundary::Tangle { comp, .. } = self.boundary {
            if comp >= n {
                return Err(DiagramError::Invalid("boundary component out of range".into()));
            }
        }
        let mut used = vec![false; n];
        let mut cur = self.bottom();
        for s in &cur {
            used[s.comp] = true;
        }
        for (i, s) in self.slices.iter().enumerate() {
            let width = cur.len();
            match *s {
                Slice::Cup { pos, comp, .. } => {
                    if pos > width {
                        return Err(DiagramError::StrandCount {
                            slice: i,
                            msg: format!("cup at {pos} but only {width} strands"),
                        });
                    }
                    if comp >= n {
                        return Err(DiagramError::Invalid(format!("slice {i}: component index out of range")));
                    }
                    used[comp] = true;
                }
                Slice::Cap { pos, rot } => {
                    if pos + 2 > width {
                        return Err(DiagramError::StrandCount {
                            slice: i,
                            msg: format!("cap at {pos} needs 2 strands but only {width} present"),
                        });
                    }
                    let (a, b) = (cur[pos], cur[pos + 1]);
                    if a.comp != b.comp {
                        return Err(DiagramError::ComponentMismatch {
                            slice: i,
                            a: self.components[a.comp].clone(),
                            b: self.components[b.comp].clone(),
                        });
                    }
                    if (a.orient, b.orient) != rot.cap_legs() {
                        return Err(DiagramError::Orientation { slice: i, what: "cap arrow" });
                    }
                }
                Slice::Cross { pos, .. } => {
                    if pos + 2 > width {
                        return Err(DiagramError::StrandCount {
                            slice: i,
                            msg: format!("crossing at {pos} needs 2 strands but only {width} present"),
                        });
                    }
                }
            }
            apply_slice(&mut cur, s);
        }
        match (self.boundary, cur.as_slice()) {
            (Boundary::Closed, []) => {}
            (Boundary::Closed, rest) => {
                return Err(DiagramError::BoundaryMismatch { found: rest.len(), declared: "closed" })
            }
            (Boundary::Tangle { comp, orient }, [top]) => {
                if top.comp != comp || top.orient != orient {
                    return Err(DiagramError::Invalid(
                        "top strand does not continue the bottom strand".into(),
                    ));
                }
            }
            (Boundary::Tangle { .. }, rest) => {
                return Err(DiagramError::BoundaryMismatch { found: rest.len(), declared: "a 1-1 tangle" })
            }
        }
        if let Some(i) = used.iter().position(|u| !u) {
            return Err(DiagramError::Unused(self.components[i].clone()));
        }
        Ok(())
    }

    /// Signed self-crossing count of each component (its blackboard framing).
    pub fn writhes(&self) -> Vec<(String, i64)> {
        let m = self.crossing_matrix();
        self.components.iter().enumerate().map(|(i, c)| (c.clone(), m[i][i])).collect()
    }

    /// Signed crossing counts: diagonal = self-crossings, off-diagonal = all
    /// crossings between the pair (twice the linking number).
    fn crossing_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.components.len();
        let mut m = vec![vec![0i64; n]; n];
        for (s, level) in self.slices.iter().zip(self.levels()) {
            if let Slice::Cross { pos, sign } = *s {
                let (a, b) = (level[pos].comp, level[pos + 1].comp);
                m[a][b] += sign.value();
                if a != b {
                    m[b][a] += sign.value();
                }
            }
        }
        m
    }

    /// Full linking matrix over all components.
    pub fn linking_matrix(&self) -> Vec<Vec<i64>> {
        let mut m = self.crossing_matrix();
        let n = m.len();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    debug_assert_eq!(m[i][j] % 2, 0, "closed components cross evenly");
                    m[i][j] /= 2;
                }
            }
        }
        m
    }

    /// Sum of signs of crossings where component `over` passes over `under`.
    pub fn over_count(&self, under: usize, over: usize) -> i64 {
        let mut total = 0;
        for (s, level) in self.slices.iter().zip(self.levels()) {
            if let Slice::Cross { pos, sign } = *s {
                let (l, r) = (level[pos], level[pos + 1]);
                let (top, bottom) = if left_is_over(l.orient, r.orient, sign) { (l, r) } else { (r, l) };
                if top.comp == over && bottom.comp == under && top.comp != bottom.comp {
                    total += sign.value();
                }
            }
        }
        total
    }

    /// Linking data for the components tagged as surgery; graph pairs use the
    /// over-crossing count.
    pub fn linking_data(&self, roles: &BTreeMap<String, Role>) -> LinkingData {
        let full = self.linking_matrix();
        let role = |i: usize| roles.get(&self.components[i]).copied().unwrap_or(Role::Surgery);
        let surgery: Vec<usize> = (0..self.components.len()).filter(|&i| role(i) == Role::Surgery).collect();
        let graph: Vec<usize> = (0..self.components.len()).filter(|&i| role(i) == Role::Graph).collect();
        let matrix = surgery.iter().map(|&i| surgery.iter().map(|&j| full[i][j]).collect()).collect();
        let mut graph_links = Vec::new();
        for &i in &surgery {
            for &j in &graph {
                graph_links.push((self.components[i].clone(), self.components[j].clone(), self.over_count(i, j)));
            }
        }
        LinkingData {
            labels: surgery.iter().map(|&i| self.components[i].clone()).collect(),
            matrix,
            graph_links,
        }
    }
}

/// The linking matrix over surgery components and the surgery/graph counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingData {
    pub labels: Vec<String>,
    pub matrix: Vec<Vec<i64>>,
    /// `(surgery, graph, lk)` where `lk` counts crossings with the graph edge on top.
    pub graph_links: Vec<(String, String, i64)>,
}

pub(crate) fn apply_slice(cur: &mut Vec<Strand>, s: &Slice) {
    match *s {
        Slice::Cup { pos, rot, comp } => {
            let (l, r) = rot.cup_legs();
            cur.splice(pos..pos, [Strand { comp, orient: l }, Strand { comp, orient: r }]);
        }
        Slice::Cap { pos, .. } => {
            cur.drain(pos..pos + 2);
        }
        Slice::Cross { pos, .. } => cur.swap(pos, pos + 1),
    }
}

/// Multiplicity and weight carried by a component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Color {
    pub mul: GroupElement,
    pub weight: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ComponentColor {
    Plain(Color),
    /// The Kirby color `Omega(mul, weight)`.
    Kirby(Color),
}

impl ComponentColor {
    pub fn plain(mul: GroupElement, weight: i64) -> Self {
        ComponentColor::Plain(Color { mul, weight })
    }

    pub fn kirby(mul: GroupElement, weight: i64) -> Self {
        ComponentColor::Kirby(Color { mul, weight })
    }

    pub fn color(&self) -> &Color {
        match self {
            ComponentColor::Plain(c) | ComponentColor::Kirby(c) => c,
        }
    }

    pub fn is_kirby(&self) -> bool {
        matches!(self, ComponentColor::Kirby(_))
    }
}

pub type Coloring = BTreeMap<String, ComponentColor>;

/// Checks that every component has an admissible color.
pub fn check_coloring(d: &Diagram, coloring: &Coloring) -> Result<(), DiagramError> {
    for c in d.components() {
        let col = coloring.get(c).ok_or_else(|| DiagramError::Uncolored(c.clone()))?;
        if !col.color().mul.is_color_admissible() {
            return Err(DiagramError::Inadmissible(c.clone()));
        }
    }
    Ok(())
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format::render_body(self))
    }
}
