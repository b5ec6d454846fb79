//! Text format for diagrams and surgery presentations.
//!
//! ```text
//! palette free=u,v
//! component a mul=u weight=1
//! component b mul=v weight=0 kirby
//! boundary closed
//! role a surgery
//! omega a = u
//! cup> 0 a
//! x+ 1
//! cap< 0
//! ```
//!
//! Statements are separated by newlines or `;`. A cup may name its
//! component; unnamed curves take the declared labels in order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{Boundary, Coloring, ComponentColor, Diagram, DiagramError, Rot, Orient, Sign, Slice};
use crate::palette::{GroupElement, PaletteSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Surgery,
    Graph,
}

/// A parsed file: the diagram, its coloring, and optional presentation data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseFile {
    pub palette: PaletteSpec,
    pub diagram: Diagram,
    pub coloring: Coloring,
    pub roles: BTreeMap<String, Role>,
    pub omega: BTreeMap<String, GroupElement>,
}

impl MorseFile {
    /// A plain file with the given diagram and coloring and no presentation data.
    pub fn new(palette: PaletteSpec, diagram: Diagram, coloring: Coloring) -> Self {
        Self { palette, diagram, coloring, roles: BTreeMap::new(), omega: BTreeMap::new() }
    }
}

/// Parses using the file's `palette` line, or `Q(t)` if there is none.
pub fn parse_morse(text: &str) -> Result<MorseFile, DiagramError> {
    parse_morse_with(text, &PaletteSpec::rational_functions())
}

/// Parses using the file's `palette` line, or `fallback` if there is none.
pub fn parse_morse_with(text: &str, fallback: &PaletteSpec) -> Result<MorseFile, DiagramError> {
    let stmts = statements(text);
    let mut palette = fallback.clone();
    for st in &stmts {
        if st.words.first().map(|w| w.1.as_str()) == Some("palette") {
            let arg = st.rest_after(1);
            palette = arg.parse().map_err(|e| st.err(st.col_of(1), format!("{e}")))?;
        }
    }

    let mut components: Vec<String> = Vec::new();
    let mut coloring = Coloring::new();
    let mut boundary: Option<(String, Orient, &Stmt)> = None;
    let mut closed = false;
    let mut roles = BTreeMap::new();
    let mut omega = BTreeMap::new();
    let mut raw: Vec<(RawSlice, &Stmt)> = Vec::new();

    for st in &stmts {
        let head = st.words[0].1.as_str();
        match head {
            "palette" => {}
            "component" => {
                let label = st.word(1)?;
                if components.iter().any(|c| c == label) {
                    return Err(DiagramError::DuplicateComponent(label.to_string()));
                }
                let mut mul = None;
                let mut weight = None;
                let mut kirby = false;
                for (i, (col, w)) in st.words.iter().enumerate().skip(2) {
                    if let Some(v) = w.strip_prefix("mul=") {
                        mul = Some(palette.parse_element(v).map_err(|e| st.err(*col, e.to_string()))?);
                    } else if let Some(v) = w.strip_prefix("weight=") {
                        weight = Some(v.parse::<i64>().map_err(|_| st.err(*col, format!("bad weight `{v}`")))?);
                    } else if w == "kirby" {
                        kirby = true;
                    } else {
                        return Err(st.err(st.words[i].0, format!("unexpected `{w}`")));
                    }
                }
                let mul = mul.ok_or_else(|| st.err(st.words[0].0, "missing mul=".into()))?;
                let weight = weight.unwrap_or(0);
                if !mul.is_color_admissible() {
                    return Err(DiagramError::Inadmissible(label.to_string()));
                }
                let color = if kirby { ComponentColor::kirby(mul, weight) } else { ComponentColor::plain(mul, weight) };
                components.push(label.to_string());
                coloring.insert(label.to_string(), color);
            }
            "boundary" => {
                let arg = st.rest_after(1);
                if arg == "closed" {
                    closed = true;
                } else if let Some(inner) = arg.strip_prefix("tangle(").and_then(|s| s.strip_suffix(')')) {
                    let mut parts = inner.split(',').map(str::trim);
                    let label = parts.next().unwrap_or("").to_string();
                    let orient = match parts.next() {
                        None | Some("up") => Orient::Up,
                        Some("down") => Orient::Down,
                        Some(o) => return Err(st.err(st.col_of(1), format!("bad orientation `{o}`"))),
                    };
                    boundary = Some((label, orient, st));
                } else {
                    return Err(st.err(st.col_of(1), format!("bad boundary `{arg}`")));
                }
            }
            "role" => {
                let label = st.word(1)?.to_string();
                let role = match st.word(2)? {
                    "surgery" => Role::Surgery,
                    "graph" => Role::Graph,
                    r => return Err(st.err(st.col_of(2), format!("bad role `{r}`"))),
                };
                roles.insert(label, role);
            }
            "omega" => {
                let label = st.word(1)?.to_string();
                if st.word(2)? != "=" {
                    return Err(st.err(st.col_of(2), "expected `=`".into()));
                }
                let g = palette.parse_element(&st.rest_after(3)).map_err(|e| st.err(st.col_of(3), e.to_string()))?;
                omega.insert(label, g);
            }
            _ => raw.push((parse_slice(st)?, st)),
        }
    }
    if closed && boundary.is_some() {
        return Err(DiagramError::Invalid("boundary declared twice".into()));
    }
    for label in roles.keys().chain(omega.keys()) {
        if !components.contains(label) {
            return Err(DiagramError::UnknownComponent(label.clone()));
        }
    }

    let boundary_label = match &boundary {
        Some((label, orient, st)) => {
            if !components.contains(label) {
                return Err(st.err(st.col_of(1), format!("unknown component `{label}`")));
            }
            Some((label.clone(), *orient))
        }
        None => None,
    };
    let (diagram, extra) = resolve(components, boundary_label, raw)?;
    if let Some(label) = extra.into_iter().next() {
        return Err(DiagramError::Uncolored(label));
    }
    Ok(MorseFile { palette, diagram, coloring, roles, omega })
}

#[derive(Clone, Debug)]
struct RawSlice {
    kind: RawKind,
    pos: usize,
    label: Option<String>,
}

#[derive(Clone, Copy, Debug)]
enum RawKind {
    Cup(Rot),
    Cap(Rot),
    Cross(Sign),
}

fn parse_slice(st: &Stmt) -> Result<RawSlice, DiagramError> {
    let (col, word) = &st.words[0];
    let kind = match word.as_str() {
        "cup>" => RawKind::Cup(Rot::Ccw),
        "cup<" => RawKind::Cup(Rot::Cw),
        "cap>" => RawKind::Cap(Rot::Ccw),
        "cap<" => RawKind::Cap(Rot::Cw),
        "x+" => RawKind::Cross(Sign::Pos),
        "x-" => RawKind::Cross(Sign::Neg),
        w => return Err(st.err(*col, format!("unknown statement `{w}`"))),
    };
    let pos_word = st.word(1)?;
    let pos = pos_word.parse::<usize>().map_err(|_| st.err(st.col_of(1), format!("bad position `{pos_word}`")))?;
    let label = st.words.get(2).map(|w| w.1.clone());
    if label.is_some() && !matches!(kind, RawKind::Cup(_)) {
        return Err(st.err(st.col_of(2), "only cups take a component label".into()));
    }
    if st.words.len() > 3 {
        return Err(st.err(st.col_of(3), "trailing input".into()));
    }
    Ok(RawSlice { kind, pos, label })
}

/// Assigns component labels by connectivity and builds the diagram.
/// Returns labels that had to be invented for unlabeled curves.
fn resolve(
    mut components: Vec<String>,
    boundary: Option<(String, Orient)>,
    raw: Vec<(RawSlice, &Stmt)>,
) -> Result<(Diagram, Vec<String>), DiagramError> {
    // Union-find over curves: node 0 is the boundary strand, one node per cup.
    let mut parent: Vec<usize> = vec![0];
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let mut cur: Vec<usize> = if boundary.is_some() { vec![0] } else { Vec::new() };
    let mut cup_node = Vec::new();
    for (s, st) in &raw {
        let width = cur.len();
        match s.kind {
            RawKind::Cup(_) => {
                if s.pos > width {
                    return Err(st.err(st.col_of(1), format!("cup at {} but only {width} strands", s.pos)));
                }
                let node = parent.len();
                parent.push(node);
                cup_node.push(node);
                cur.splice(s.pos..s.pos, [node, node]);
            }
            RawKind::Cap(_) => {
                if s.pos + 2 > width {
                    return Err(st.err(st.col_of(1), format!("cap at {} but only {width} strands", s.pos)));
                }
                let (a, b) = (find(&mut parent, cur[s.pos]), find(&mut parent, cur[s.pos + 1]));
                parent[a.max(b)] = a.min(b);
                cur.drain(s.pos..s.pos + 2);
            }
            RawKind::Cross(_) => {
                if s.pos + 2 > width {
                    return Err(st.err(st.col_of(1), format!("crossing at {} but only {width} strands", s.pos)));
                }
                cur.swap(s.pos, s.pos + 1);
            }
        }
    }

    // Explicit labels per curve.
    let mut curve_label: BTreeMap<usize, String> = BTreeMap::new();
    if let Some((label, _)) = &boundary {
        curve_label.insert(0, label.clone());
    }
    let mut k = 0;
    for (s, st) in &raw {
        if let RawKind::Cup(_) = s.kind {
            let root = find(&mut parent, cup_node[k]);
            k += 1;
            if let Some(label) = &s.label {
                if !components.contains(label) {
                    return Err(st.err(st.col_of(2), format!("unknown component `{label}`")));
                }
                match curve_label.get(&root) {
                    Some(prev) if prev != label => {
                        return Err(DiagramError::ComponentMismatch { slice: 0, a: prev.clone(), b: label.clone() })
                    }
                    _ => {
                        curve_label.insert(root, label.clone());
                    }
                }
            }
        }
    }
    // Unlabeled curves take unused declared labels in order of appearance.
    let mut unused: Vec<String> =
        components.iter().filter(|c| !curve_label.values().any(|v| v == *c)).cloned().collect::<Vec<_>>();
    unused.reverse();
    let mut invented = Vec::new();
    let mut k = 0;
    for (s, _) in &raw {
        if let RawKind::Cup(_) = s.kind {
            let root = find(&mut parent, cup_node[k]);
            k += 1;
            if !curve_label.contains_key(&root) {
                let label = match unused.pop() {
                    Some(l) => l,
                    None => {
                        let mut n = components.len() + 1;
                        while components.contains(&n.to_string()) {
                            n += 1;
                        }
                        components.push(n.to_string());
                        invented.push(n.to_string());
                        n.to_string()
                    }
                };
                curve_label.insert(root, label);
            }
        }
    }

    let index = |label: &str| components.iter().position(|c| c == label).unwrap();
    let mut slices = Vec::with_capacity(raw.len());
    let mut k = 0;
    for (s, _) in &raw {
        slices.push(match s.kind {
            RawKind::Cup(rot) => {
                let root = find(&mut parent, cup_node[k]);
                k += 1;
                Slice::Cup { pos: s.pos, rot, comp: index(&curve_label[&root]) }
            }
            RawKind::Cap(rot) => Slice::Cap { pos: s.pos, rot },
            RawKind::Cross(sign) => Slice::Cross { pos: s.pos, sign },
        });
    }
    let boundary = match boundary {
        None => Boundary::Closed,
        Some((label, orient)) => Boundary::Tangle { comp: index(&label), orient },
    };
    if !invented.is_empty() {
        return Ok((Diagram { components, boundary, slices }, invented));
    }
    let d = Diagram::new(components, boundary, slices).map_err(|e| locate(e, &raw))?;
    Ok((d, invented))
}

/// Attaches a line number to slice-indexed errors.
fn locate(e: DiagramError, raw: &[(RawSlice, &Stmt)]) -> DiagramError {
    let at = |slice: usize| raw.get(slice).map(|(_, st)| (st.line, st.words[0].0));
    match &e {
        DiagramError::StrandCount { slice, msg } => match at(*slice) {
            Some((line, col)) => DiagramError::Syntax { line, col, msg: msg.clone() },
            None => e,
        },
        DiagramError::Orientation { slice, what } => match at(*slice) {
            Some((line, col)) => {
                DiagramError::Syntax { line, col, msg: format!("orientations do not match the {what}") }
            }
            None => e,
        },
        _ => e,
    }
}

#[derive(Debug)]
struct Stmt {
    line: usize,
    /// `(column, word)`, columns 1-based.
    words: Vec<(usize, String)>,
}

impl Stmt {
    fn err(&self, col: usize, msg: String) -> DiagramError {
        DiagramError::Syntax { line: self.line, col, msg }
    }

    fn col_of(&self, i: usize) -> usize {
        self.words.get(i).or(self.words.last()).map(|w| w.0).unwrap_or(1)
    }

    fn word(&self, i: usize) -> Result<&str, DiagramError> {
        self.words.get(i).map(|w| w.1.as_str()).ok_or_else(|| {
            let end = self.words.last().map(|(c, w)| c + w.len()).unwrap_or(1);
            self.err(end, format!("expected {} more field(s)", i + 1 - self.words.len()))
        })
    }

    fn rest_after(&self, i: usize) -> String {
        self.words[i.min(self.words.len())..].iter().map(|w| w.1.as_str()).collect::<Vec<_>>().join(" ")
    }
}

fn statements(text: &str) -> Vec<Stmt> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let mut start = 0;
        for piece in line.split(';') {
            let mut words = Vec::new();
            let mut col = None;
            let mut cur = String::new();
            for (i, ch) in piece.char_indices() {
                if ch.is_whitespace() {
                    if let Some(c) = col.take() {
                        words.push((c, std::mem::take(&mut cur)));
                    }
                } else {
                    if col.is_none() {
                        col = Some(start + i + 1);
                    }
                    cur.push(ch);
                }
            }
            if let Some(c) = col {
                words.push((c, cur));
            }
            if !words.is_empty() {
                out.push(Stmt { line: ln + 1, words });
            }
            start += piece.len() + 1;
        }
    }
    out
}

/// Renders a full file; `parse_morse(render(f))` reproduces `f`.
pub fn render(file: &MorseFile) -> String {
    let mut s = String::new();
    let p = &file.palette;
    writeln!(s, "palette {p}").unwrap();
    for label in file.diagram.components() {
        match file.coloring.get(label) {
            Some(c) => {
                let col = c.color();
                let kirby = if c.is_kirby() { " kirby" } else { "" };
                writeln!(s, "component {label} mul={} weight={}{kirby}", col.mul.display(p), col.weight).unwrap();
            }
            None => writeln!(s, "# component {label} is uncolored").unwrap(),
        }
    }
    for (label, role) in &file.roles {
        let r = match role {
            Role::Surgery => "surgery",
            Role::Graph => "graph",
        };
        writeln!(s, "role {label} {r}").unwrap();
    }
    for (label, g) in &file.omega {
        writeln!(s, "omega {label} = {}", g.display(p)).unwrap();
    }
    s.push_str(&render_body(&file.diagram));
    s
}

/// The boundary line and slices.
pub(super) fn render_body(d: &Diagram) -> String {
    let mut s = String::new();
    match d.boundary() {
        Boundary::Closed => writeln!(s, "boundary closed").unwrap(),
        Boundary::Tangle { comp, orient: Orient::Up } => writeln!(s, "boundary tangle({})", d.label(comp)).unwrap(),
        Boundary::Tangle { comp, orient: Orient::Down } => {
            writeln!(s, "boundary tangle({},down)", d.label(comp)).unwrap()
        }
    }
    for slice in d.slices() {
        match *slice {
            Slice::Cup { pos, rot, comp } => writeln!(s, "cup{} {pos} {}", rot.symbol(), d.label(comp)).unwrap(),
            Slice::Cap { pos, rot } => writeln!(s, "cap{} {pos}", rot.symbol()).unwrap(),
            Slice::Cross { pos, sign: Sign::Pos } => writeln!(s, "x+ {pos}").unwrap(),
            Slice::Cross { pos, sign: Sign::Neg } => writeln!(s, "x- {pos}").unwrap(),
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_one_line() {
        let f = parse_morse("component 1 mul=t weight=0\ncup> 0 ; cap> 0").unwrap();
        assert_eq!(f.diagram.components(), ["1"]);
        assert!(f.diagram.is_closed());
        assert_eq!(f.diagram.slices().len(), 2);
    }

    #[test]
    fn open_top_is_rejected() {
        let e = parse_morse("component 1 mul=t weight=0\ncup> 0 ; x+ 0").unwrap_err();
        assert!(matches!(e, DiagramError::BoundaryMismatch { found: 2, .. }), "{e:?}");
    }

    #[test]
    fn cap_orientation_mismatch_reports_line() {
        let e = parse_morse("component 1 mul=t\ncup> 0\ncap< 0").unwrap_err();
        assert!(matches!(e, DiagramError::Syntax { line: 3, .. }), "{e:?}");
    }

    #[test]
    fn uncolored_curve() {
        let e = parse_morse("component 1 mul=t\ncup> 0 ; cap> 0 ; cup> 0 ; cap> 0").unwrap_err();
        assert_eq!(e, DiagramError::Uncolored("2".into()));
    }

    #[test]
    fn labels_follow_connectivity() {
        let text = "palette free=u,v\ncomponent a mul=u\ncomponent b mul=v\n\
                    cup> 0\ncup< 2\nx- 1\nx- 1\ncap> 0\ncap< 0\n";
        let f = parse_morse(text).unwrap();
        let comps: Vec<usize> = f
            .diagram
            .slices()
            .iter()
            .filter_map(|s| if let Slice::Cup { comp, .. } = s { Some(*comp) } else { None })
            .collect();
        assert_eq!(comps, vec![0, 1]);
        assert_eq!(f.diagram.linking_matrix(), vec![vec![0, -1], vec![-1, 0]]);
    }

    #[test]
    fn syntax_error_has_position() {
        let e = parse_morse("component 1 mul=t\ncup> zero").unwrap_err();
        assert_eq!(e, DiagramError::Syntax { line: 2, col: 6, msg: "bad position `zero`".into() });
    }

    #[test]
    fn presentation_lines_round_trip() {
        let text = "palette xi7\ncomponent 1 mul=xi^2 weight=1 kirby\nrole 1 surgery\nomega 1 = xi^2\n\
                    boundary closed\ncup> 0 1\nx+ 0\ncap< 0\n";
        let f = parse_morse(text).unwrap();
        assert_eq!(parse_morse(&render(&f)).unwrap(), f);
        assert_eq!(f.roles["1"], Role::Surgery);
    }
}
