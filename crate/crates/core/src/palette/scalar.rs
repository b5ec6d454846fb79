use std::fmt;

use num_rational::BigRational;

use super::cyclo::Cyclo;
use super::gcd::{exact_div, gcd};
use super::group::{GroupElement, PaletteSpec};
use super::laurent::Laurent;
use super::PaletteError;

/// An element of the coefficient field `B`: a fraction of Laurent
/// polynomials kept in canonical form, so `==` is field equality.
///
/// Canonical form: the denominator is an ordinary polynomial with minimum
/// exponent 0 in every variable and lex-leading coefficient 1, coprime to
/// the numerator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Laurent,
    den: Laurent,
}

impl Scalar {
    pub fn zero(palette: &PaletteSpec) -> Self {
        let (n, l) = ring_shape(palette);
        Self { num: Laurent::zero(n, l), den: Laurent::one(n, l) }
    }

    pub fn one(palette: &PaletteSpec) -> Self {
        Self::from_int(palette, 1)
    }

    pub fn from_int(palette: &PaletteSpec, k: i64) -> Self {
        let (n, l) = ring_shape(palette);
        Self::from_laurent(Laurent::constant(n, Cyclo::from_int(l, k)))
    }

    pub fn from_rational(palette: &PaletteSpec, q: BigRational) -> Self {
        let (n, l) = ring_shape(palette);
        Self::from_laurent(Laurent::constant(n, Cyclo::from_rational(l, q)))
    }

    pub fn from_laurent(p: Laurent) -> Self {
        let den = Laurent::one(p.nvars(), p.order());
        Self::fraction(p, den).expect("denominator is one")
    }

    /// The group element `g` embedded as a monomial of `B`.
    pub fn monomial(palette: &PaletteSpec, g: &GroupElement) -> Self {
        Self::from_laurent(group_monomial(palette, g))
    }

    pub fn fraction(num: Laurent, den: Laurent) -> Result<Self, PaletteError> {
        if den.is_zero() {
            return Err(PaletteError::DivisionByZero);
        }
        Ok(canonicalize(num, den))
    }

    pub fn numerator(&self) -> &Laurent {
        &self.num
    }

    pub fn denominator(&self) -> &Laurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return canonicalize(self.num.add(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        canonicalize(num, self.den.mul(&other.den))
    }

    pub fn neg(&self) -> Self {
        Self { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            let (n, l) = (self.num.nvars(), self.num.order());
            return Self { num: Laurent::zero(n, l), den: Laurent::one(n, l) };
        }
        if self.den.is_one() && other.den.is_one() {
            return Self { num: self.num.mul(&other.num), den: self.den.clone() };
        }
        canonicalize(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn mul_laurent(&self, p: &Laurent) -> Self {
        self.mul(&Self::from_laurent(p.clone()))
    }

    pub fn inv(&self) -> Result<Self, PaletteError> {
        Self::fraction(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self, PaletteError> {
        if other.is_zero() {
            return Err(PaletteError::DivisionByZero);
        }
        Ok(canonicalize(self.num.mul(&other.den), self.den.mul(&other.num)))
    }

    pub fn pow(&self, n: i64) -> Result<Self, PaletteError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let (nv, l) = (self.num.nvars(), self.num.order());
        let mut acc = Self { num: Laurent::one(nv, l), den: Laurent::one(nv, l) };
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Renders with the palette's generator names.
    pub fn display<'a>(&'a self, palette: &'a PaletteSpec) -> impl fmt::Display + 'a {
        DisplayScalar { s: self, names: palette.free_names() }
    }
}

/// `d(t) = 1 / (t^2 - t^-2)`, defined for admissible `t`.
pub fn d(palette: &PaletteSpec, t: &GroupElement) -> Result<Scalar, PaletteError> {
    if !palette.contains(t) {
        return Err(PaletteError::Mismatch);
    }
    if !t.is_color_admissible() {
        return Err(PaletteError::Inadmissible);
    }
    let diff = group_monomial(palette, &t.pow(2)).sub(&group_monomial(palette, &t.pow(-2)));
    Scalar::from_laurent(diff).inv()
}

/// `g` as a Laurent monomial: free exponents, coefficient `xi^k`.
pub fn group_monomial(palette: &PaletteSpec, g: &GroupElement) -> Laurent {
    let (_, l) = ring_shape(palette);
    let coeff = match g.torsion_exponent() {
        Some(k) => Cyclo::root_power(l, k),
        None => Cyclo::one(l),
    };
    Laurent::monomial(g.free_exponents().to_vec(), coeff)
}

pub(crate) fn ring_shape(palette: &PaletteSpec) -> (usize, u32) {
    (palette.free_rank(), palette.torsion_order().unwrap_or(1))
}

fn canonicalize(num: Laurent, den: Laurent) -> Scalar {
    let (n, l) = (num.nvars(), num.order());
    if num.is_zero() {
        return Scalar { num, den: Laurent::one(n, l) };
    }
    let nmin = num.min_exponents();
    let dmin = den.min_exponents();
    let mut np = num.shift(&nmin.iter().map(|e| -e).collect::<Vec<_>>());
    let mut dp = den.shift(&dmin.iter().map(|e| -e).collect::<Vec<_>>());
    if !dp.is_monomial() && np.as_constant().is_none() {
        let g = gcd(&np, &dp);
        if !g.is_one() {
            np = exact_div(&np, &g).expect("gcd divides numerator");
            dp = exact_div(&dp, &g).expect("gcd divides denominator");
        }
    }
    let lead_inv = dp.leading().expect("nonzero").1.inv().expect("nonzero");
    let shift: Vec<i64> = nmin.iter().zip(&dmin).map(|(a, b)| a - b).collect();
    Scalar { num: np.mul_term(&shift, &lead_inv), den: dp.scale(&lead_inv) }
}

struct DisplayScalar<'a> {
    s: &'a Scalar,
    names: &'a [String],
}

impl fmt::Display for DisplayScalar<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.s.num.display(self.names).to_string();
        if self.s.den.is_one() {
            return write!(f, "{num}");
        }
        let den = self.s.den.display(self.names).to_string();
        let wrap = |p: &Laurent, text: String| if p.len() > 1 { format!("({text})") } else { text };
        write!(f, "{}/{}", wrap(&self.s.num, num), wrap(&self.s.den, den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qt() -> PaletteSpec {
        PaletteSpec::rational_functions()
    }

    #[test]
    fn d_of_free_generator() {
        let p = qt();
        let t = p.generator(0);
        let dt = d(&p, &t).unwrap();
        assert_eq!(dt.display(&p).to_string(), "t^2/(t^4 - 1)");
        let diff = Scalar::monomial(&p, &t.pow(2)).sub(&Scalar::monomial(&p, &t.pow(-2)));
        assert!(dt.mul(&diff).is_one());
        assert_eq!(d(&p, &t.inv()).unwrap(), dt.neg());
    }

    #[test]
    fn d_in_cyclotomic_field() {
        let p = PaletteSpec::cyclotomic(7).unwrap();
        let xi = p.xi().unwrap();
        let dxi = d(&p, &xi).unwrap();
        let diff = Scalar::monomial(&p, &xi.pow(2)).sub(&Scalar::monomial(&p, &xi.pow(5)));
        assert!(dxi.mul(&diff).is_one());
        assert!(dxi.denominator().is_one());
        assert!(d(&p, &p.identity()).is_err());
    }

    #[test]
    fn division_by_zero() {
        let p = qt();
        assert_eq!(Scalar::one(&p).div(&Scalar::zero(&p)), Err(PaletteError::DivisionByZero));
        assert!(Scalar::zero(&p).inv().is_err());
    }

    #[test]
    fn self_division_is_one() {
        let p = PaletteSpec::new(["u", "v"], None).unwrap();
        let u = p.generator(0);
        let v = p.generator(1);
        let a = Scalar::monomial(&p, &u).add(&Scalar::monomial(&p, &v.pow(-3))).add(&Scalar::from_int(&p, 2));
        assert!(a.div(&a).unwrap().is_one());
    }

    #[test]
    fn association_order_does_not_matter() {
        let p = PaletteSpec::new(["u", "v"], None).unwrap();
        let u = Scalar::monomial(&p, &p.generator(0));
        let v = Scalar::monomial(&p, &p.generator(1));
        let one = Scalar::one(&p);
        let a = one.div(&u.add(&one)).unwrap();
        let b = u.div(&v.sub(&one)).unwrap();
        let c = v.mul(&u).div(&u.sub(&v)).unwrap();
        let left = a.add(&b).add(&c);
        let right = c.add(&a.add(&b));
        assert_eq!(left, right);
        let back = left.sub(&b).sub(&c);
        assert_eq!(back, a);
    }
}
