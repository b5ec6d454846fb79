//! The 3-manifold invariant of a surgery presentation with a cohomology class.

mod cohomology;
mod sigma;

use std::collections::BTreeMap;
use std::fmt;

use crate::diagram::{Coloring, ComponentColor, Diagram, LinkingData, MorseFile, Role};
use crate::evaluator::{alexander_kirby_terms, EvalError};
use crate::palette::{d, GroupElement, PaletteError, PaletteSpec, Scalar};

pub use cohomology::{determinant, enumerate_cohomology};
pub use sigma::sigma_plus;

/// Image `omega([m_K])` of each surgery meridian.
pub type CohomologyClass = BTreeMap<String, GroupElement>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("incompatible input: {}", .0.join("; "))]
    Incompatible(Vec<String>),
    #[error(
        "graph components ({}) need trivalent vertex weights, which are not available; only link presentations are evaluated",
        .0.join(", ")
    )]
    GraphVertices(Vec<String>),
    #[error("H1 has a free summand (linking matrix is singular); only torsion classes are enumerated")]
    FreeHomology,
    #[error("palette `{0}` has no torsion generator")]
    NoTorsion(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Palette(#[from] PaletteError),
}

/// A framed link in `S^3` with component roles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub palette: PaletteSpec,
    pub diagram: Diagram,
    pub roles: BTreeMap<String, Role>,
}

impl Presentation {
    /// Every component is a surgery component.
    pub fn new(palette: PaletteSpec, diagram: Diagram) -> Self {
        Self { palette, diagram, roles: BTreeMap::new() }
    }

    pub fn from_file(file: &MorseFile) -> Self {
        Self { palette: file.palette.clone(), diagram: file.diagram.clone(), roles: file.roles.clone() }
    }

    pub fn linking_data(&self) -> LinkingData {
        self.diagram.linking_data(&self.roles)
    }

    pub fn graph_components(&self) -> Vec<String> {
        self.diagram
            .components()
            .iter()
            .filter(|c| self.roles.get(*c) == Some(&Role::Graph))
            .cloned()
            .collect()
    }
}

/// Outcome of [`check_compatible`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Compatibility {
    pub violations: Vec<String>,
}

impl Compatibility {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for Compatibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "compatible");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn monomial_text(factors: &[(&str, i64)]) -> String {
    let parts: Vec<String> = factors
        .iter()
        .filter(|(_, k)| *k != 0)
        .map(|(l, k)| if *k == 1 { format!("w({l})") } else { format!("w({l})^{k}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Checks the H1 relations and computability. Never fails; problems are
/// listed in the report.
pub fn check_compatible(p: &Presentation, omega: &CohomologyClass) -> Compatibility {
    let mut violations = Vec::new();
    let data = p.linking_data();
    if p.diagram.components().is_empty() {
        violations.push("the link is empty: no computable presentation".into());
    }
    for g in p.graph_components() {
        violations.push(format!("component {g} is a graph edge; vertex weights are unavailable"));
    }
    for label in omega.keys() {
        if !data.labels.contains(label) {
            violations.push(format!("omega is given for unknown surgery component {label}"));
        }
    }
    let mut complete = true;
    for label in &data.labels {
        match omega.get(label) {
            None => {
                violations.push(format!("omega is missing for component {label}"));
                complete = false;
            }
            Some(g) if !p.palette.contains(g) => {
                violations.push(format!("omega({label}) is not in palette {}", p.palette));
                complete = false;
            }
            Some(g) if g.is_identity() => violations.push(format!(
                "meridian of component {label} maps to the identity: presentation is not computable"
            )),
            Some(_) => {}
        }
    }
    if !complete {
        return Compatibility { violations };
    }
    for (i, label) in data.labels.iter().enumerate() {
        let mut prod = p.palette.identity();
        let mut factors = Vec::new();
        for (j, other) in data.labels.iter().enumerate() {
            let k = data.matrix[i][j];
            factors.push((other.as_str(), k));
            prod = prod.mul(&omega[other].pow(k)).expect("checked membership");
        }
        if !prod.is_identity() {
            violations.push(format!(
                "relation at component {label} fails: {} = {}, expected 1",
                monomial_text(&factors),
                prod.display(&p.palette)
            ));
        }
    }
    Compatibility { violations }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantResult {
    pub value: Scalar,
    pub r: usize,
    pub sigma_plus: usize,
    pub terms: usize,
}

/// `Delta(L) / (2^r (-1)^sigma_+)` with each surgery component colored
/// `Omega(omega(m_K), 1)`.
pub fn invariant(p: &Presentation, omega: &CohomologyClass) -> Result<InvariantResult, InvariantError> {
    invariant_with_cut(p, omega, None)
}

pub fn invariant_with_cut(
    p: &Presentation,
    omega: &CohomologyClass,
    cut: Option<&str>,
) -> Result<InvariantResult, InvariantError> {
    let graph = p.graph_components();
    if !graph.is_empty() {
        return Err(InvariantError::GraphVertices(graph));
    }
    let report = check_compatible(p, omega);
    if !report.is_ok() {
        return Err(InvariantError::Incompatible(report.violations));
    }
    let data = p.linking_data();
    let sp = sigma_plus(&data.matrix)?;
    let coloring: Coloring =
        omega.iter().map(|(l, g)| (l.clone(), ComponentColor::kirby(g.clone(), 1))).collect();
    let (raw, terms) = alexander_kirby_terms(&p.palette, &p.diagram, &coloring, cut)?;
    let r = data.labels.len();
    let mut norm = Scalar::from_int(&p.palette, 1i64 << r);
    if sp % 2 == 1 {
        norm = norm.neg();
    }
    Ok(InvariantResult { value: raw.div(&norm)?, r, sigma_plus: sp, terms })
}

/// Blows up the strand at `(level, pos)` with a `sign`-framed meridian named
/// `label`. The meridian's class is that of the strand's component, which
/// keeps every relation satisfied.
pub fn blow_up_presentation(
    p: &Presentation,
    omega: &CohomologyClass,
    level: usize,
    pos: usize,
    sign: crate::diagram::Sign,
    label: &str,
) -> Result<(Presentation, CohomologyClass), InvariantError> {
    let diagram = p.diagram.blow_up_at(level, pos, sign, label).map_err(EvalError::from)?;
    let strand = p.diagram.levels()[level][pos];
    let host = p.diagram.label(strand.comp);
    let g = omega
        .get(host)
        .ok_or_else(|| InvariantError::Incompatible(vec![format!("omega is missing for component {host}")]))?;
    let mut w = omega.clone();
    w.insert(label.to_string(), g.clone());
    let mut q = p.clone();
    q.diagram = diagram;
    Ok((q, w))
}

/// `(-1)^(sigma_+ + 1) d(u) d(v)` for the chain with framings `m`, `n`.
pub fn lens_closed_form(
    palette: &PaletteSpec,
    m: i64,
    n: i64,
    u: &GroupElement,
    v: &GroupElement,
) -> Result<Scalar, InvariantError> {
    let mut violations = Vec::new();
    let r1 = u.pow(m).mul(&v.inv())?;
    if !r1.is_identity() {
        violations.push(format!("relation u^{m}*v^-1 = 1 fails: got {}", r1.display(palette)));
    }
    let r2 = u.inv().mul(&v.pow(n))?;
    if !r2.is_identity() {
        violations.push(format!("relation u^-1*v^{n} = 1 fails: got {}", r2.display(palette)));
    }
    if !violations.is_empty() {
        return Err(InvariantError::Incompatible(violations));
    }
    let sp = sigma_plus(&[vec![m, -1], vec![-1, n]])?;
    let dd = d(palette, u)?.mul(&d(palette, v)?);
    Ok(if sp % 2 == 0 { dd.neg() } else { dd })
}

/// `prod_e mul(e)^lk(K, e)`, with the framing of `K` as its self-linking.
pub fn clk(palette: &PaletteSpec, diagram: &Diagram, coloring: &Coloring, label: &str) -> Result<GroupElement, InvariantError> {
    crate::diagram::check_coloring(diagram, coloring).map_err(EvalError::from)?;
    let k = diagram.component_index(label).map_err(EvalError::from)?;
    let lk = diagram.linking_matrix();
    let mut g = palette.identity();
    for (j, other) in diagram.components().iter().enumerate() {
        g = g.mul(&coloring[other].color().mul.pow(lk[k][j]))?;
    }
    Ok(g)
}
