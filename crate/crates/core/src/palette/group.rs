use std::fmt;
use std::str::FromStr;

use super::PaletteError;

/// Shape of the multiplicity group `G = Z^k x Z/l`.
///
/// The free generators carry display names (`t`, `pi`, `u`, ...); the torsion
/// generator, when present, is always called `xi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PaletteSpec {
    free_names: Vec<String>,
    torsion_order: Option<u32>,
}

pub const TORSION_NAME: &str = "xi";

impl PaletteSpec {
    pub fn new<S: Into<String>>(
        free_names: impl IntoIterator<Item = S>,
        torsion_order: Option<u32>,
    ) -> Result<Self, PaletteError> {
        let free_names: Vec<String> = free_names.into_iter().map(Into::into).collect();
        for (i, name) in free_names.iter().enumerate() {
            let valid = !name.is_empty()
                && name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid || name == TORSION_NAME || name == "d" {
                return Err(PaletteError::BadGeneratorName(name.clone()));
            }
            if free_names[..i].contains(name) {
                return Err(PaletteError::BadGeneratorName(name.clone()));
            }
        }
        if let Some(l) = torsion_order {
            if l < 3 || !is_prime(l) {
                return Err(PaletteError::BadTorsionOrder(l));
            }
        }
        Ok(Self { free_names, torsion_order })
    }

    /// `Q(t)` with `G = <t>`.
    pub fn rational_functions() -> Self {
        Self::new(["t"], None).unwrap()
    }

    /// `Q(pi, xi_l)` with `G = <pi, xi_l>`.
    pub fn cyclotomic(l: u32) -> Result<Self, PaletteError> {
        Self::new(["pi"], Some(l))
    }

    pub fn free_rank(&self) -> usize {
        self.free_names.len()
    }

    pub fn free_names(&self) -> &[String] {
        &self.free_names
    }

    pub fn torsion_order(&self) -> Option<u32> {
        self.torsion_order
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { free: vec![0; self.free_rank()], torsion: self.torsion_order.map(|l| (0, l)) }
    }

    /// The `i`-th free generator.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut g = self.identity();
        g.free[i] = 1;
        g
    }

    pub fn generator_named(&self, name: &str) -> Option<GroupElement> {
        if name == TORSION_NAME {
            return self.xi();
        }
        self.free_names.iter().position(|n| n == name).map(|i| self.generator(i))
    }

    /// The torsion generator, if the palette has one.
    pub fn xi(&self) -> Option<GroupElement> {
        self.torsion_order.map(|l| GroupElement { free: vec![0; self.free_rank()], torsion: Some((1 % l, l)) })
    }

    pub fn element(&self, free: Vec<i64>, torsion: i64) -> Result<GroupElement, PaletteError> {
        if free.len() != self.free_rank() {
            return Err(PaletteError::Mismatch);
        }
        let torsion = match self.torsion_order {
            Some(l) => Some((torsion.rem_euclid(l as i64) as u32, l)),
            None if torsion == 0 => None,
            None => return Err(PaletteError::Mismatch),
        };
        Ok(GroupElement { free, torsion })
    }

    /// Parses products of powers such as `pi^2*xi^3`, `u^-1 v`, or `1`.
    pub fn parse_element(&self, text: &str) -> Result<GroupElement, PaletteError> {
        let bad = || PaletteError::BadElement(text.to_string());
        let mut acc = self.identity();
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(bad());
        }
        if trimmed == "1" {
            return Ok(acc);
        }
        for factor in trimmed.split(|c: char| c == '*' || c.is_whitespace()).filter(|f| !f.is_empty()) {
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e = e.trim_start_matches('{').trim_end_matches('}');
                    (n, i64::from_str(e).map_err(|_| bad())?)
                }
                None => (factor, 1),
            };
            let g = self.generator_named(name).ok_or_else(bad)?;
            acc = acc.mul(&g.pow(exp))?;
        }
        Ok(acc)
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.free.len() == self.free_rank() && g.torsion.map(|(_, l)| l) == self.torsion_order
    }

    /// Every element of the torsion subgroup, `xi^0 .. xi^(l-1)`.
    pub fn torsion_elements(&self) -> Vec<GroupElement> {
        match self.torsion_order {
            Some(l) => (0..l as i64).map(|k| self.element(vec![0; self.free_rank()], k).unwrap()).collect(),
            None => vec![self.identity()],
        }
    }
}

impl fmt::Display for PaletteSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.free_names.as_slice(), self.torsion_order) {
            ([t], None) if t == "t" => write!(f, "qt"),
            ([p], Some(l)) if p == "pi" => write!(f, "xi{l}"),
            (names, l) => {
                write!(f, "free={}", names.join(","))?;
                if let Some(l) = l {
                    write!(f, ";torsion={l}")?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for PaletteSpec {
    type Err = PaletteError;

    /// Accepts `qt`, `xi<l>`, or `free=u,v[;torsion=l]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "qt" {
            return Ok(Self::rational_functions());
        }
        if let Some(l) = s.strip_prefix("xi") {
            let l = l.parse().map_err(|_| PaletteError::BadPalette(s.to_string()))?;
            return Self::cyclotomic(l);
        }
        let mut names = Vec::new();
        let mut torsion = None;
        for part in s.split(';') {
            match part.trim().split_once('=') {
                Some(("free", list)) => {
                    names = list.split(',').map(|n| n.trim().to_string()).filter(|n| !n.is_empty()).collect()
                }
                Some(("torsion", l)) => {
                    torsion = Some(l.trim().parse().map_err(|_| PaletteError::BadPalette(s.to_string()))?)
                }
                _ => return Err(PaletteError::BadPalette(s.to_string())),
            }
        }
        Self::new(names, torsion)
    }
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// An element of `G`, stored additively as an exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    free: Vec<i64>,
    /// `(exponent of xi reduced into [0, l), l)`.
    torsion: Option<(u32, u32)>,
}

impl GroupElement {
    pub fn free_exponents(&self) -> &[i64] {
        &self.free
    }

    pub fn torsion_exponent(&self) -> Option<u32> {
        self.torsion.map(|(e, _)| e)
    }

    pub fn is_identity(&self) -> bool {
        self.free.iter().all(|&e| e == 0) && self.torsion.is_none_or(|(e, _)| e == 0)
    }

    fn compatible(&self, other: &Self) -> bool {
        self.free.len() == other.free.len() && self.torsion.map(|t| t.1) == other.torsion.map(|t| t.1)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PaletteError> {
        if !self.compatible(other) {
            return Err(PaletteError::Mismatch);
        }
        let free = self.free.iter().zip(&other.free).map(|(a, b)| a + b).collect();
        let torsion = self.torsion.zip(other.torsion).map(|((a, l), (b, _))| ((a + b) % l, l));
        Ok(Self { free, torsion })
    }

    pub fn pow(&self, n: i64) -> Self {
        let free = self.free.iter().map(|a| a * n).collect();
        let torsion = self.torsion.map(|(a, l)| ((a as i64 * n).rem_euclid(l as i64) as u32, l));
        Self { free, torsion }
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    /// A multiplicity is usable as a color iff `g^4 != 1`.
    pub fn is_color_admissible(&self) -> bool {
        !self.pow(4).is_identity()
    }

    /// Renders with the generator names of `palette`.
    pub fn display<'a>(&'a self, palette: &'a PaletteSpec) -> impl fmt::Display + 'a {
        DisplayElement { g: self, palette }
    }
}

struct DisplayElement<'a> {
    g: &'a GroupElement,
    palette: &'a PaletteSpec,
}

impl fmt::Display for DisplayElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        let names = self.palette.free_names().iter().map(String::as_str);
        for (name, &e) in names.zip(&self.g.free) {
            match e {
                0 => {}
                1 => factors.push(name.to_string()),
                e => factors.push(format!("{name}^{e}")),
            }
        }
        match self.g.torsion_exponent() {
            None | Some(0) => {}
            Some(1) => factors.push(TORSION_NAME.to_string()),
            Some(e) => factors.push(format!("{TORSION_NAME}^{e}")),
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}
