#![allow(dead_code)]

use arcstab::zchain::SparseIntMatrix;
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Textbook Smith form: move a smallest entry to the corner, clear its row
/// and column by Euclidean steps, fold in any entry it fails to divide,
/// recurse on the minor.
pub fn textbook_snf(a: &[Vec<i64>]) -> Vec<BigInt> {
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let mut nonzero = false;
        'search: for row in m.iter().skip(t) {
            for x in row.iter().skip(t) {
                if !x.is_zero() {
                    nonzero = true;
                    break 'search;
                }
            }
        }
        if !nonzero {
            break;
        }
        loop {
            let (mut bi, mut bj) = (t, t);
            let mut best: Option<BigInt> = None;
            for i in t..rows {
                for j in t..cols {
                    let v = m[i][j].abs();
                    if !v.is_zero() && best.as_ref().is_none_or(|b| &v < b) {
                        best = Some(v);
                        bi = i;
                        bj = j;
                    }
                }
            }
            m.swap(t, bi);
            for row in m.iter_mut() {
                row.swap(t, bj);
            }
            let pivot = m[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                let q = m[i][t].div_floor(&pivot);
                for j in t..cols {
                    let d = &q * &m[t][j];
                    m[i][j] -= d;
                }
                clean &= m[i][t].is_zero();
            }
            for j in t + 1..cols {
                let q = m[t][j].div_floor(&pivot);
                for i in t..rows {
                    let d = &q * &m[i][t];
                    m[i][j] -= d;
                }
                clean &= m[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !m[i][j].is_multiple_of(&pivot));
            match bad {
                Some((i, _)) => {
                    for j in t..cols {
                        let v = m[i][j].clone();
                        m[t][j] += v;
                    }
                }
                None => break,
            }
        }
        out.push(m[t][t].abs());
        t += 1;
    }
    out
}

fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    (0..n)
        .permutations(n)
        .map(|p| {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let term: BigInt = (0..n).map(|i| m[i][p[i]].clone()).product();
            if inversions % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Invariant factors from gcds of minors, d_k = D_k / D_{k-1}.
pub fn determinantal_factors(a: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut out = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in (0..rows).combinations(k) {
            for cs in (0..cols).combinations(k) {
                let minor: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| BigInt::from(a[r][c])).collect())
                    .collect();
                g = g.gcd(&det(&minor));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

/// Determinant by fraction-free elimination.
pub fn bareiss_det(m: &SparseIntMatrix) -> BigInt {
    let mut a = m.to_dense();
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * a[n - 1][n - 1].clone()
}

/// A random matrix of size up to `max_dim` with roughly `density` nonzero
/// entries drawn from `[-9, 9]`.
pub fn random_matrix(rng: &mut ChaCha8Rng, max_dim: usize, density: f64) -> Vec<Vec<i64>> {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| if rng.gen_bool(density) { rng.gen_range(-9..=9) } else { 0 })
                .collect()
        })
        .collect()
}
