use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{CohomologyClass, InvariantError, Presentation};

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[n - 1][n - 1]
}

fn inv_mod(a: u64, l: u64) -> u64 {
    // l is prime
    let mut r = 1u64;
    let (mut b, mut e) = (a % l, l - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % l;
        }
        b = b * b % l;
        e >>= 1;
    }
    r
}

/// Basis of the kernel of `m` over `Z/l`.
fn kernel_mod(m: &[Vec<i64>], l: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let li = l as i64;
    let mut a: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|&x| x.rem_euclid(li) as u64).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&i| a[i][col] != 0) else { continue };
        a.swap(p, row);
        let inv = inv_mod(a[row][col], l);
        for x in a[row].iter_mut() {
            *x = *x * inv % l;
        }
        for i in 0..n {
            if i != row && a[i][col] != 0 {
                let f = a[i][col];
                for j in 0..n {
                    a[i][j] = (a[i][j] + (l - f) * a[row][j]) % l;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (l - a[r][f]) % l;
            }
            v
        })
        .collect()
}

/// Every nontrivial class with torsion images, sorted by exponent vector.
pub fn enumerate_cohomology(p: &Presentation) -> Result<Vec<CohomologyClass>, InvariantError> {
    let graph = p.graph_components();
    if !graph.is_empty() {
        return Err(InvariantError::GraphVertices(graph));
    }
    let l = p.palette.torsion_order().ok_or_else(|| InvariantError::NoTorsion(p.palette.to_string()))? as u64;
    let data = p.linking_data();
    if determinant(&data.matrix).is_zero() {
        return Err(InvariantError::FreeHomology);
    }
    let basis = kernel_mod(&data.matrix, l);
    let total = (l as usize).pow(basis.len() as u32);
    let n = data.labels.len();
    let mut vectors: Vec<Vec<u64>> = (1..total)
        .into_par_iter()
        .map(|mut idx| {
            let mut v = vec![0u64; n];
            for b in &basis {
                let c = (idx % l as usize) as u64;
                idx /= l as usize;
                for (x, y) in v.iter_mut().zip(b) {
                    *x = (*x + c * y) % l;
                }
            }
            v
        })
        .collect();
    vectors.sort();
    let free = vec![0; p.palette.free_rank()];
    vectors
        .into_iter()
        .map(|v| {
            data.labels
                .iter()
                .zip(v)
                .map(|(label, e)| Ok((label.clone(), p.palette.element(free.clone(), e as i64)?)))
                .collect()
        })
        .collect()
}
