#![allow(dead_code)]

pub mod props;

use std::path::PathBuf;

use gl11_core::diagram::{hopf_with_twists, lens_chain, parse_morse, split_unknots, unknot, Diagram, HopfVariant};
use gl11_core::{Coloring, ComponentColor, GroupElement, PaletteSpec, Sign};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

pub fn suite_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../suite")
}

fn from_text(text: &str) -> Diagram {
    parse_morse(text).expect("corpus entry parses").diagram
}

/// Closed diagrams used by the corpus-wide properties.
pub fn corpus() -> Vec<(&'static str, Diagram)> {
    let mut v = vec![
        ("unknot", unknot()),
        ("unknot+curl", unknot().insert_curl(1, 0, Sign::Pos).unwrap()),
        ("hopf-", hopf_with_twists(HopfVariant::Negative)),
        ("hopf+", hopf_with_twists(HopfVariant::Positive)),
        ("split2", split_unknots(2)),
        ("chain(2,1)", lens_chain(2, 1)),
        ("chain(-1,2)", lens_chain(-1, 2)),
        (
            "trefoil",
            from_text("component 1 mul=t\ncup> 0\ncup> 1\nx+ 2\nx+ 2\nx+ 2\ncap> 1\ncap> 0"),
        ),
        (
            "torus(2,4)",
            from_text("component 1 mul=t\ncomponent 2 mul=t\ncup> 0\ncup> 1\nx+ 2\nx+ 2\nx+ 2\nx+ 2\ncap> 1\ncap> 0"),
        ),
        (
            "figure8",
            from_text("component 1 mul=t\ncup> 0\ncup> 1\ncup> 2\nx+ 3\nx- 4\nx+ 3\nx- 4\ncap> 2\ncap> 1\ncap> 0"),
        ),
    ];
    v.push(("hopf-pushoff", hopf_with_twists(HopfVariant::Negative).pushoff("2", "3", true).unwrap()));
    v.push(("unknot-blowup", unknot().blow_up_at(1, 0, Sign::Neg, "2").unwrap()));
    v
}

/// Palettes exercised by the randomized tests.
pub fn palettes() -> Vec<PaletteSpec> {
    vec![
        PaletteSpec::rational_functions(),
        PaletteSpec::new(["a", "b"], None).unwrap(),
        PaletteSpec::cyclotomic(7).unwrap(),
        PaletteSpec::cyclotomic(5).unwrap(),
    ]
}

/// A color with `t^4 != 1`, drawn from small exponents.
pub fn admissible(p: &PaletteSpec, free: &[i64], tors: i64) -> GroupElement {
    let mut f: Vec<i64> = (0..p.free_rank()).map(|i| free.get(i).copied().unwrap_or(0)).collect();
    let tors = if p.torsion_order().is_some() { tors } else { 0 };
    let g = p.element(f.clone(), tors).unwrap();
    if g.is_color_admissible() {
        return g;
    }
    f[0] = 1;
    p.element(f, tors).unwrap()
}

/// Raw material for a random coloring: per component free exponents,
/// torsion exponent and weight.
pub type ColorSeed = Vec<(Vec<i64>, i64, i64)>;

pub fn color_seed(max_components: usize) -> impl Strategy<Value = ColorSeed> {
    prop::collection::vec(
        (prop::collection::vec(-2i64..=2, 2), 0i64..7, -3i64..=3),
        max_components..=max_components,
    )
}

pub fn coloring(p: &PaletteSpec, d: &Diagram, seed: &ColorSeed) -> Coloring {
    d.components()
        .iter()
        .zip(seed.iter().cycle())
        .map(|(l, (f, t, w))| (l.clone(), ComponentColor::plain(admissible(p, f, *t), *w)))
        .collect()
}

// ---- sign-count oracle for symmetric matrices ----

type Poly = Vec<BigRational>; // coefficient of x^i at index i

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn derivative(p: &Poly) -> Poly {
    trim(p.iter().enumerate().skip(1).map(|(i, c)| c * q(i as i64)).collect())
}

fn rem(a: &Poly, b: &Poly) -> Poly {
    let mut r = a.clone();
    let lb = b.last().unwrap();
    while r.len() >= b.len() && !r.is_empty() {
        let f = r.last().unwrap() / lb;
        let shift = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &f * c;
        }
        r = trim(r);
    }
    r
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier.
pub fn char_poly(m: &[Vec<i64>]) -> Poly {
    let n = m.len();
    let a: Vec<Vec<BigRational>> = m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    let mut coeffs = vec![q(0); n + 1];
    coeffs[n] = q(1);
    let mut mk = vec![vec![q(0); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![q(0); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = q(0);
                for l in 0..n {
                    s += &a[i][l] * &mk[l][j];
                }
                if i == j {
                    s += &coeffs[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        mk = next;
        let mut tr = q(0);
        for i in 0..n {
            for l in 0..n {
                tr += &a[i][l] * &mk[l][i];
            }
        }
        coeffs[n - k] = -tr / q(k as i64);
    }
    coeffs
}

fn sign_at_zero(p: &Poly) -> i32 {
    match p.first() {
        Some(c) if c.is_positive() => 1,
        Some(c) if c.is_negative() => -1,
        _ => 0,
    }
}

fn sign_at_infinity(p: &Poly) -> i32 {
    if p.last().unwrap().is_positive() {
        1
    } else {
        -1
    }
}

fn changes(signs: impl Iterator<Item = i32>) -> usize {
    let s: Vec<i32> = signs.filter(|&x| x != 0).collect();
    s.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Distinct roots of a square-free `p` in `(0, inf)`, by Sturm's theorem.
fn sturm_positive(p: &Poly) -> usize {
    if p.len() <= 1 {
        return 0;
    }
    let mut seq = vec![p.clone(), derivative(p)];
    loop {
        let r = rem(&seq[seq.len() - 2], &seq[seq.len() - 1]);
        if r.is_empty() {
            break;
        }
        seq.push(r.into_iter().map(|c| -c).collect());
    }
    changes(seq.iter().map(sign_at_zero)) - changes(seq.iter().map(sign_at_infinity))
}

/// Positive roots of `p` counted with multiplicity: roots of multiplicity
/// `k` appear in `p`, `gcd(p, p')`, ... exactly `k` times.
pub fn positive_roots(p: &Poly) -> usize {
    let mut p = trim(p.clone());
    // strip roots at 0
    while p.first().is_some_and(|c| c.is_zero()) {
        p.remove(0);
    }
    let mut total = 0;
    while p.len() > 1 {
        let g = gcd(&p, &derivative(&p));
        let sq = quotient(&p, &g);
        total += sturm_positive(&sq);
        p = g;
    }
    total
}

fn quotient(a: &Poly, b: &Poly) -> Poly {
    let mut r = a.clone();
    let lb = b.last().unwrap();
    let mut out = vec![q(0); a.len() + 1 - b.len()];
    while r.len() >= b.len() && !r.is_empty() {
        let f = r.last().unwrap() / lb;
        let shift = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &f * c;
        }
        out[shift] = f;
        r = trim(r);
    }
    trim(out)
}

pub fn sturm_sigma_plus(m: &[Vec<i64>]) -> usize {
    positive_roots(&char_poly(m))
}

pub fn symmetric_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5).prop_flat_map(|n| {
        prop::collection::vec(prop_oneof![3 => -6i64..=6, 1 => Just(0i64)], n * (n + 1) / 2).prop_map(move |v| {
            let mut m = vec![vec![0; n]; n];
            let mut k = 0;
            for i in 0..n {
                for j in i..n {
                    m[i][j] = v[k];
                    m[j][i] = v[k];
                    k += 1;
                }
            }
            m
        })
    })
}
