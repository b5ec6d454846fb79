//! Coefficients in `Q` or `Q(xi_l) = Q[x]/Phi_l(x)` for an odd prime `l`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element of `Q[x]/Phi_l`, stored as its unique representative of degree
/// `< l - 1` (trailing zero coefficients trimmed). With `order == 1` this is
/// plain `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclo {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclo {
    pub fn zero(order: u32) -> Self {
        Self { order, coeffs: Vec::new() }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, BigRational::one())
    }

    pub fn from_int(order: u32, n: i64) -> Self {
        Self::from_rational(order, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(order: u32, q: BigRational) -> Self {
        let mut c = Self { order, coeffs: vec![q] };
        c.trim();
        c
    }

    /// The power `xi^k` of the primitive root.
    pub fn root_power(order: u32, k: u32) -> Self {
        if order <= 1 {
            return Self::one(order);
        }
        let mut v = vec![BigRational::zero(); order as usize];
        v[(k % order) as usize] = BigRational::one();
        Self::reduce_cyclic(order, v)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True when the element lies in `Q` (no `xi` terms).
    pub fn is_rational(&self) -> bool {
        self.coeffs.len() <= 1
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Reduces a vector of `l` coefficients taken mod `x^l - 1` modulo `Phi_l`.
    fn reduce_cyclic(order: u32, mut v: Vec<BigRational>) -> Self {
        let top = v.pop().unwrap_or_else(BigRational::zero);
        if !top.is_zero() {
            for c in v.iter_mut() {
                *c -= &top;
            }
        }
        let mut out = Self { order, coeffs: v };
        out.trim();
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order, other.order);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            coeffs.push(c);
        }
        let mut out = Self { order: self.order, coeffs };
        out.trim();
        out
    }

    pub fn neg(&self) -> Self {
        Self { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order, other.order);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.order);
        }
        if self.order <= 1 {
            return Self::from_rational(self.order, &self.coeffs[0] * &other.coeffs[0]);
        }
        if other.is_rational() {
            return self.scale(&other.coeffs[0]);
        }
        if self.is_rational() {
            return other.scale(&self.coeffs[0]);
        }
        let l = self.order as usize;
        let mut v = vec![BigRational::zero(); l];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[(i + j) % l] += a * b;
                }
            }
        }
        Self::reduce_cyclic(self.order, v)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let mut out = Self { order: self.order, coeffs: self.coeffs.iter().map(|c| c * q).collect() };
        out.trim();
        out
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_rational() {
            return Some(Self::from_rational(self.order, self.coeffs[0].recip()));
        }
        // Extended Euclid in Q[x] against Phi_l = 1 + x + ... + x^(l-1).
        let phi: Vec<BigRational> = vec![BigRational::one(); self.order as usize];
        let (g, s) = upoly::ext_gcd(&self.coeffs, &phi);
        debug_assert!(g.len() == 1, "Phi_l is irreducible");
        let s = upoly::scale(&s, &g[0].recip());
        let mut v = vec![BigRational::zero(); self.order as usize];
        for (i, c) in upoly::rem(&s, &phi).into_iter().enumerate() {
            v[i] = c;
        }
        Some(Self::reduce_cyclic(self.order, v))
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    /// Whether the element is a positive rational; used to pick a sign when
    /// rendering.
    pub fn is_negative_rational(&self) -> bool {
        self.is_rational() && !self.is_zero() && self.coeffs[0].is_negative()
    }
}

impl fmt::Display for Cyclo {
    /// Rational constants print bare; genuine cyclotomic elements print as
    /// a parenthesised polynomial in `xi`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.is_rational() {
            return write!(f, "{}", self.coeffs[0]);
        }
        write!(f, "(")?;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if i == 1 {
                        write!(f, "xi")?
                    } else {
                        write!(f, "xi^{i}")?
                    }
                }
            }
        }
        write!(f, ")")
    }
}

/// Dense univariate polynomials over `Q`, lowest degree first, trimmed.
mod upoly {
    use num_rational::BigRational;
    use num_traits::Zero;

    pub type P = Vec<BigRational>;

    fn trim(mut p: P) -> P {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }

    pub fn scale(p: &[BigRational], q: &BigRational) -> P {
        trim(p.iter().map(|c| c * q).collect())
    }

    fn sub(a: &[BigRational], b: &[BigRational]) -> P {
        let n = a.len().max(b.len());
        let z = BigRational::zero();
        trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
    }

    fn mul(a: &[BigRational], b: &[BigRational]) -> P {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    pub fn divrem(a: &[BigRational], b: &[BigRational]) -> (P, P) {
        let b = trim(b.to_vec());
        let mut r = trim(a.to_vec());
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let lead = b.last().unwrap().recip();
        let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
        while r.len() >= b.len() && !r.is_empty() {
            let shift = r.len() - b.len();
            let c = r.last().unwrap() * &lead;
            for (i, bc) in b.iter().enumerate() {
                r[i + shift] -= &c * bc;
            }
            q[shift] = c;
            r = trim(r);
        }
        (trim(q), r)
    }

    pub fn rem(a: &[BigRational], b: &[BigRational]) -> P {
        divrem(a, b).1
    }

    /// Returns `(g, s)` with `s*a = g (mod b)`.
    pub fn ext_gcd(a: &[BigRational], b: &[BigRational]) -> (P, P) {
        let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
        let (mut s0, mut s1): (P, P) = (vec![num_traits::One::one()], Vec::new());
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1);
            let s = sub(&s0, &mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        (r0, s0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_of_unity_relations() {
        for l in [3u32, 5, 7, 13] {
            let xi = Cyclo::root_power(l, 1);
            let mut acc = Cyclo::one(l);
            let mut sum = Cyclo::zero(l);
            for _ in 0..l {
                sum = sum.add(&acc);
                acc = acc.mul(&xi);
            }
            assert!(acc.is_one(), "xi^l = 1 for l={l}");
            assert!(sum.is_zero(), "1 + xi + ... + xi^(l-1) = 0 for l={l}");
        }
    }

    #[test]
    fn inverse_in_cyclotomic_field() {
        let l = 7;
        let xi = Cyclo::root_power(l, 1);
        let a = Cyclo::root_power(l, 2).sub(&Cyclo::root_power(l, 5)).add(&Cyclo::from_int(l, 3));
        assert!(a.mul(&a.inv().unwrap()).is_one());
        assert!(xi.mul(&xi.inv().unwrap()).is_one());
        assert_eq!(xi.inv().unwrap(), Cyclo::root_power(l, 6));
        assert!(Cyclo::zero(l).inv().is_none());
    }

    #[test]
    fn xi_squared_plus_inverse_is_not_one() {
        let l = 7;
        let lhs = Cyclo::root_power(l, 2).add(&Cyclo::root_power(l, 5));
        assert_ne!(lhs, Cyclo::one(l));
    }

    #[test]
    fn display() {
        let l = 7;
        assert_eq!(Cyclo::root_power(l, 1).to_string(), "(xi)");
        assert_eq!(Cyclo::root_power(l, 6).to_string(), "(-1 - xi - xi^2 - xi^3 - xi^4 - xi^5)");
        assert_eq!(Cyclo::from_int(1, -3).to_string(), "-3");
    }
}
