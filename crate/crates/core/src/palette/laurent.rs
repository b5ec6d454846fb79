use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed};

use super::cyclo::Cyclo;

/// A multivariate Laurent polynomial with [`Cyclo`] coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by exponent vector, so iteration is
/// lexicographic and zero coefficients never appear.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Laurent {
    nvars: usize,
    order: u32,
    terms: BTreeMap<Vec<i64>, Cyclo>,
}

impl Laurent {
    pub fn zero(nvars: usize, order: u32) -> Self {
        Self { nvars, order, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize, order: u32) -> Self {
        Self::constant(nvars, Cyclo::one(order))
    }

    pub fn constant(nvars: usize, c: Cyclo) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exps: Vec<i64>, c: Cyclo) -> Self {
        let mut p = Self { nvars: exps.len(), order: c.order(), terms: BTreeMap::new() };
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<i64>, &Cyclo)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(Cyclo::is_one)
    }

    /// The coefficient if this is a constant (including zero).
    pub fn as_constant(&self) -> Option<&Cyclo> {
        match self.terms.len() {
            1 => self.terms.get(&vec![0; self.nvars]),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Lex-greatest term.
    pub fn leading(&self) -> Option<(&Vec<i64>, &Cyclo)> {
        self.terms.iter().next_back()
    }

    /// Lex-smallest term.
    pub fn trailing(&self) -> Option<(&Vec<i64>, &Cyclo)> {
        self.terms.iter().next()
    }

    fn add_term(&mut self, exps: Vec<i64>, c: Cyclo) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut big, small) = if self.terms.len() >= other.terms.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (e, c) in &small.terms {
            big.add_term(e.clone(), c.clone());
        }
        big
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.neg());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        if other.is_monomial() {
            let (e, c) = other.leading().unwrap();
            return self.mul_term(e, c);
        }
        if self.is_monomial() {
            let (e, c) = self.leading().unwrap();
            return other.mul_term(e, c);
        }
        let mut out = Self::zero(self.nvars, self.order);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.mul(cb));
            }
        }
        out
    }

    /// Multiplies by the single term `c * x^exps`.
    pub fn mul_term(&self, exps: &[i64], c: &Cyclo) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.order);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, k)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), k.mul(c)))
            .collect();
        Self { nvars: self.nvars, order: self.order, terms }
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        self.mul_term(&vec![0; self.nvars], c)
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        Self { nvars: self.nvars, order: self.order, terms }
    }

    /// Per-variable minimum exponent (zeros for the zero polynomial).
    pub fn min_exponents(&self) -> Vec<i64> {
        let mut m: Option<Vec<i64>> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(m) => m.iter().zip(e).map(|(a, b)| *a.min(b)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.nvars])
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.nvars, self.order);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Renders with variable names, terms in descending lexicographic order.
    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayLaurent { p: self, names }
    }
}

struct DisplayLaurent<'a> {
    p: &'a Laurent,
    names: &'a [String],
}

impl fmt::Display for DisplayLaurent<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        for (i, (exps, c)) in self.p.terms.iter().rev().enumerate() {
            let mut vars = Vec::new();
            for (name, &e) in self.names.iter().zip(exps) {
                match e {
                    0 => {}
                    1 => vars.push(name.clone()),
                    e => vars.push(format!("{name}^{e}")),
                }
            }
            let (neg, coeff) = if c.is_rational() {
                let q = &c.coeffs()[0];
                (q.is_negative(), if q.abs().is_one() && !vars.is_empty() { None } else { Some(q.abs().to_string()) })
            } else {
                (false, Some(c.to_string()))
            };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut parts: Vec<String> = coeff.into_iter().collect();
            parts.extend(vars);
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(e: i64, c: i64) -> Laurent {
        Laurent::monomial(vec![e], Cyclo::from_int(1, c))
    }

    #[test]
    fn ring_ops() {
        let a = t(2, 1).sub(&t(-2, 1));
        let b = t(2, 1).add(&t(-2, 1));
        let prod = a.mul(&b);
        assert_eq!(prod, t(4, 1).sub(&t(-4, 1)));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.min_exponents(), vec![-2]);
    }

    #[test]
    fn display_descending() {
        let names = vec!["t".to_string()];
        let p = t(4, 1).sub(&t(0, 1));
        assert_eq!(p.display(&names).to_string(), "t^4 - 1");
        assert_eq!(t(-2, -3).display(&names).to_string(), "-3*t^-2");
    }
}
