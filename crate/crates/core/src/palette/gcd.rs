//! Polynomial gcd over `K[x_1..x_k]`, `K = Q` or `Q(xi_l)`, by recursive
//! primitive remainder sequences. Inputs must have nonnegative exponents.

use std::collections::BTreeMap;

use super::cyclo::Cyclo;
use super::laurent::Laurent;

fn degree(p: &Laurent, var: usize) -> i64 {
    p.terms().map(|(e, _)| e[var]).max().unwrap_or(0)
}

fn involves(p: &Laurent, var: usize) -> bool {
    p.terms().any(|(e, _)| e[var] != 0)
}

/// Coefficients of `p` viewed as a polynomial in `x_var`.
fn coefficients(p: &Laurent, var: usize) -> BTreeMap<i64, Laurent> {
    let mut out: BTreeMap<i64, Laurent> = BTreeMap::new();
    for (e, c) in p.terms() {
        let mut e2 = e.clone();
        e2[var] = 0;
        let term = Laurent::monomial(e2, c.clone());
        out.entry(e[var]).or_insert_with(|| Laurent::zero(p.nvars(), p.order())).add_assign(&term);
    }
    out
}

fn leading_coefficient(p: &Laurent, var: usize) -> Laurent {
    let d = degree(p, var);
    coefficients(p, var).remove(&d).unwrap_or_else(|| Laurent::zero(p.nvars(), p.order()))
}

fn var_power(nvars: usize, order: u32, var: usize, k: i64) -> Laurent {
    let mut e = vec![0; nvars];
    e[var] = k;
    Laurent::monomial(e, Cyclo::one(order))
}

/// Scales `p` so its lex-leading coefficient is 1.
pub fn monic(p: &Laurent) -> Laurent {
    match p.leading() {
        None => p.clone(),
        Some((_, c)) if c.is_one() => p.clone(),
        Some((_, c)) => p.scale(&c.inv().expect("nonzero")),
    }
}

/// `a / b` if `b` divides `a` exactly in the polynomial ring.
pub fn exact_div(a: &Laurent, b: &Laurent) -> Option<Laurent> {
    let (be, bc) = b.leading()?;
    let (be, bc_inv) = (be.clone(), bc.inv()?);
    let mut q = Laurent::zero(a.nvars(), a.order());
    let mut r = a.clone();
    while let Some((re, rc)) = r.leading() {
        let diff: Vec<i64> = re.iter().zip(&be).map(|(x, y)| x - y).collect();
        if diff.iter().any(|&d| d < 0) {
            return None;
        }
        let c = rc.mul(&bc_inv);
        let t = Laurent::monomial(diff, c);
        r = r.sub(&b.mul(&t));
        q.add_assign(&t);
    }
    Some(q)
}

/// Content of `p` with respect to `x_var`: the gcd of its coefficients.
fn content(p: &Laurent, var: usize) -> Laurent {
    let mut g = Laurent::zero(p.nvars(), p.order());
    for (_, c) in coefficients(p, var) {
        g = gcd(&g, &c);
        if g.as_constant().is_some() {
            break;
        }
    }
    g
}

fn primitive_part(p: &Laurent, var: usize) -> Laurent {
    if p.is_zero() {
        return p.clone();
    }
    let c = content(p, var);
    monic(&exact_div(p, &c).expect("content divides"))
}

fn pseudo_remainder(f: &Laurent, g: &Laurent, var: usize) -> Laurent {
    let dg = degree(g, var);
    let lc = leading_coefficient(g, var);
    let mut r = f.clone();
    while !r.is_zero() && degree(&r, var) >= dg {
        let dr = degree(&r, var);
        let lr = leading_coefficient(&r, var);
        let shifted = g.mul(&lr).mul(&var_power(f.nvars(), f.order(), var, dr - dg));
        r = r.mul(&lc).sub(&shifted);
    }
    r
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: &Laurent, b: &Laurent) -> Laurent {
    if a.is_zero() {
        return monic(b);
    }
    if b.is_zero() {
        return monic(a);
    }
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Laurent::one(a.nvars(), a.order());
    }
    let var = match (0..a.nvars()).find(|&v| involves(a, v) || involves(b, v)) {
        Some(v) => v,
        None => return Laurent::one(a.nvars(), a.order()),
    };
    if !involves(a, var) {
        return gcd(a, &content(b, var));
    }
    if !involves(b, var) {
        return gcd(&content(a, var), b);
    }
    let (ca, cb) = (content(a, var), content(b, var));
    let c = gcd(&ca, &cb);
    let pa = exact_div(a, &ca).expect("content divides");
    let pb = exact_div(b, &cb).expect("content divides");
    let (mut f, mut g) = if degree(&pa, var) >= degree(&pb, var) { (pa, pb) } else { (pb, pa) };
    while !g.is_zero() {
        let r = pseudo_remainder(&f, &g, var);
        f = g;
        g = primitive_part(&r, var);
    }
    monic(&c.mul(&primitive_part(&f, var)))
}
