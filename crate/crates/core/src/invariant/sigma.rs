use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::InvariantError;

/// Number of positive eigenvalues of a symmetric integer matrix.
///
/// Exact congruence diagonalization over `Q`: a nonzero diagonal entry is
/// used as a 1x1 pivot; when the whole remaining diagonal vanishes, an
/// off-diagonal entry `b` gives a 2x2 pivot `[[0, b], [b, 0]]`, which has
/// one eigenvalue of each sign. By Sylvester's law of inertia the pivot
/// signs give the inertia.
pub fn sigma_plus(m: &[Vec<i64>]) -> Result<usize, InvariantError> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(InvariantError::NotSymmetric);
        }
        for j in 0..i {
            if m[i][j] != m[j][i] {
                return Err(InvariantError::NotSymmetric);
            }
        }
    }
    let mut a: Vec<Vec<BigRational>> =
        m.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut count = 0;
    while !alive.is_empty() {
        if let Some(idx) = alive.iter().position(|&i| !a[i][i].is_zero()) {
            let p = alive.remove(idx);
            if a[p][p].is_positive() {
                count += 1;
            }
            let piv = a[p][p].clone();
            for &i in &alive {
                let f = &a[i][p] / &piv;
                if f.is_zero() {
                    continue;
                }
                for &j in &alive {
                    let delta = &f * &a[p][j];
                    a[i][j] -= delta;
                }
            }
            continue;
        }
        let pair = alive.iter().enumerate().find_map(|(x, &i)| {
            alive[x + 1..].iter().find(|&&j| !a[i][j].is_zero()).map(|&j| (i, j))
        });
        let Some((p, q)) = pair else { break };
        count += 1;
        alive.retain(|&i| i != p && i != q);
        // Schur complement of [[0, b], [b, 0]]: A - C B^-1 C^T with B^-1 = [[0, 1/b], [1/b, 0]].
        let b = a[p][q].clone();
        let rows: Vec<(usize, BigRational, BigRational)> =
            alive.iter().map(|&i| (i, a[i][p].clone(), a[i][q].clone())).collect();
        for (i, ip, iq) in &rows {
            for (j, jp, jq) in &rows {
                let delta = (ip * jq + iq * jp) / &b;
                a[*i][*j] -= delta;
            }
        }
    }
    Ok(count)
}
