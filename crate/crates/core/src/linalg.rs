//! Exact linear algebra over the integers and rationals.
//!
//! Signatures are computed by symmetric reduction (completion of squares with
//! pivoting), never by numeric eigenvalues. Tridiagonal forms get a faster
//! integer Sturm-sequence path; the two routes cross-check each other in
//! tests.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rat;

/// Inertia of a symmetric rational matrix: (positive, negative, zero)
/// eigenvalue counts, computed by exact symmetric reduction.
pub fn sym_signature_rational(a: &[Vec<Rat>]) -> (usize, usize, usize) {
    let n = a.len();
    for row in a {
        assert_eq!(row.len(), n, "matrix must be square");
    }
    debug_assert!(is_symmetric(a));
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let mut live: Vec<usize> = (0..n).collect();
    let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);

    while !live.is_empty() {
        // Diagonal pivot if available.
        if let Some(kpos) = live.iter().position(|&k| !m[k][k].is_zero()) {
            let k = live[kpos];
            let piv = m[k][k].clone();
            if piv.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            live.remove(kpos);
            for (ri, &r) in live.iter().enumerate() {
                let fr = m[r][k].clone() / piv.clone();
                for &s in live[ri..].iter() {
                    let delta = fr.clone() * m[k][s].clone();
                    let val = m[r][s].clone() - delta;
                    m[r][s] = val.clone();
                    m[s][r] = val;
                }
            }
            continue;
        }
        // All live diagonal entries vanish: look for an off-diagonal entry.
        let mut pair = None;
        'outer: for (ii, &i) in live.iter().enumerate() {
            for &j in live[ii + 1..].iter() {
                if !m[i][j].is_zero() {
                    pair = Some((i, j));
                    break 'outer;
                }
            }
        }
        match pair {
            None => {
                zero += live.len();
                live.clear();
            }
            Some((i, j)) => {
                // Hyperbolic plane: contributes one +1 and one -1.
                pos += 1;
                neg += 1;
                let aij = m[i][j].clone();
                live.retain(|&k| k != i && k != j);
                for (ri, &r) in live.iter().enumerate() {
                    for &s in live[ri..].iter() {
                        let delta = (m[r][i].clone() * m[j][s].clone()
                            + m[r][j].clone() * m[i][s].clone())
                            / aij.clone();
                        let val = m[r][s].clone() - delta;
                        m[r][s] = val.clone();
                        m[s][r] = val;
                    }
                }
            }
        }
    }
    (pos, neg, zero)
}

fn is_symmetric(a: &[Vec<Rat>]) -> bool {
    let n = a.len();
    (0..n).all(|i| (i + 1..n).all(|j| a[i][j] == a[j][i]))
}

/// Integer convenience wrapper around [`sym_signature_rational`].
pub fn sym_signature_int(a: &[Vec<i64>]) -> (usize, usize, usize) {
    let m: Vec<Vec<Rat>> = a
        .iter()
        .map(|row| row.iter().map(|&v| Rat::from_integer(BigInt::from(v))).collect())
        .collect();
    sym_signature_rational(&m)
}

/// Signature (pos - neg) of a nonsingular symmetric tridiagonal integer
/// matrix, via the Sturm sequence of leading principal minors.
///
/// `diag` has length n, `off` length n-1. Errors if the matrix is singular.
pub fn tridiag_signature(diag: &[BigInt], off: &[BigInt]) -> Result<i64> {
    let n = diag.len();
    assert!(off.len() + 1 == n || (n == 0 && off.is_empty()));
    if n == 0 {
        return Ok(0);
    }
    // Minors d[k] = det of leading k x k block; d[k] = diag[k-1]*d[k-1] - off[k-2]^2*d[k-2].
    let mut minors: Vec<BigInt> = Vec::with_capacity(n + 1);
    minors.push(BigInt::one());
    minors.push(diag[0].clone());
    for k in 2..=n {
        let m = &diag[k - 1] * &minors[k - 1] - &off[k - 2] * &off[k - 2] * &minors[k - 2];
        minors.push(m);
    }
    if minors[n].is_zero() {
        return Err(Error::Degenerate("singular tridiagonal matrix".into()));
    }
    // Count sign changes; a vanishing interior minor takes the sign opposite
    // to its predecessor (its neighbors are never both zero).
    let mut signs: Vec<i8> = Vec::with_capacity(n + 1);
    signs.push(1);
    for k in 1..=n {
        let s = if minors[k].is_zero() {
            -signs[k - 1]
        } else if minors[k].is_positive() {
            1
        } else {
            -1
        };
        signs.push(s);
    }
    let negs = signs.windows(2).filter(|w| w[0] != w[1]).count() as i64;
    Ok(n as i64 - 2 * negs)
}

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
pub fn det_int(a: &[Vec<i64>]) -> BigInt {
    let n = a.len();
    for row in a {
        assert_eq!(row.len(), n, "matrix must be square");
    }
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                None => return BigInt::zero(),
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Exact inverse of a square integer matrix over the rationals, by
/// Gauss-Jordan elimination. Returns `None` if singular.
pub fn invert_rational(a: &[Vec<i64>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .map(|row| row.iter().map(|&v| Rat::from_integer(BigInt::from(v))).collect())
        .collect();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    for k in 0..n {
        let piv = (k..n).find(|&r| !m[r][k].is_zero())?;
        m.swap(k, piv);
        inv.swap(k, piv);
        let p = m[k][k].clone();
        for c in 0..n {
            m[k][c] = m[k][c].clone() / p.clone();
            inv[k][c] = inv[k][c].clone() / p.clone();
        }
        for r in 0..n {
            if r == k || m[r][k].is_zero() {
                continue;
            }
            let f = m[r][k].clone();
            for c in 0..n {
                let dm = f.clone() * m[k][c].clone();
                m[r][c] = m[r][c].clone() - dm;
                let di = f.clone() * inv[k][c].clone();
                inv[r][c] = inv[r][c].clone() - di;
            }
        }
    }
    Some(inv)
}

/// Solves `A x = b` exactly over the rationals. Returns `None` if `A` is
/// singular. `A` is a square integer matrix.
pub fn solve_rational(a: &[Vec<i64>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    assert_eq!(b.len(), n);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .map(|row| row.iter().map(|&v| Rat::from_integer(BigInt::from(v))).collect())
        .collect();
    let mut rhs: Vec<Rat> = b.to_vec();
    for k in 0..n {
        let piv = (k..n).find(|&r| !m[r][k].is_zero())?;
        m.swap(k, piv);
        rhs.swap(k, piv);
        let p = m[k][k].clone();
        for r in 0..n {
            if r == k || m[r][k].is_zero() {
                continue;
            }
            let f = m[r][k].clone() / p.clone();
            for c in k..n {
                let delta = f.clone() * m[k][c].clone();
                m[r][c] = m[r][c].clone() - delta;
            }
            let delta = f * rhs[k].clone();
            rhs[r] = rhs[r].clone() - delta;
        }
    }
    Some(
        (0..n)
            .map(|k| rhs[k].clone() / m[k][k].clone())
            .collect(),
    )
}
