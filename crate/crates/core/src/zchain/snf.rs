//! Smith normal form over the integers.
//!
//! Without transforms, unit pivots are eliminated sparsely first (choosing the
//! sparsest column holding a ±1, then the sparsest row), using checked
//! machine integers and retrying with big integers on overflow. Whatever
//! remains is reduced densely. With transforms, the whole matrix is reduced
//! densely while accumulating the row and column operations.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::matrix::{int_list, SparseIntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Transforms {
    pub u: SparseIntMatrix,
    pub v: SparseIntMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SnfResult {
    #[serde(serialize_with = "int_list::serialize")]
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transforms: Option<Transforms>,
}

impl SnfResult {
    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}

pub fn snf(m: &SparseIntMatrix, want_transforms: bool) -> SnfResult {
    if want_transforms {
        let mut a = m.to_dense();
        let (u, v) = dense_snf(&mut a, m.cols(), true);
        let factors = diagonal(&a);
        let u = u.expect("transforms requested");
        let v = v.expect("transforms requested");
        return SnfResult {
            rank: factors.len(),
            invariant_factors: factors,
            transforms: Some(Transforms {
                u: SparseIntMatrix::from_dense(&u).expect("square"),
                v: SparseIntMatrix::from_dense(&v).expect("square"),
            }),
        };
    }
    let (units, mut rest) = match eliminate_units::<i64>(m) {
        Some(out) => out,
        None => eliminate_units::<BigInt>(m).expect("big integers do not overflow"),
    };
    let width = rest.first().map_or(0, Vec::len);
    dense_snf(&mut rest, width, false);
    let mut factors = vec![BigInt::one(); units];
    factors.extend(diagonal(&rest));
    SnfResult {
        rank: factors.len(),
        invariant_factors: factors,
        transforms: None,
    }
}

pub fn rank(m: &SparseIntMatrix) -> usize {
    snf(m, false).rank
}

trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn from_big(v: &BigInt) -> Option<Self>;
    fn into_big(self) -> BigInt;
    fn nil() -> Self;
    fn is_nil(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    fn checked_sub(&self, other: &Self) -> Option<Self>;
}

impl Scalar for i64 {
    fn from_big(v: &BigInt) -> Option<Self> {
        i64::try_from(v).ok()
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
    fn nil() -> Self {
        0
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        i64::checked_mul(*self, *other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        i64::checked_sub(*self, *other)
    }
}

impl Scalar for BigInt {
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn into_big(self) -> BigInt {
        self
    }
    fn nil() -> Self {
        <BigInt as Zero>::zero()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
}

/// Removes unit pivots one at a time. Returns the number removed and the
/// remaining submatrix, or `None` on arithmetic overflow.
fn eliminate_units<T: Scalar>(m: &SparseIntMatrix) -> Option<(usize, Vec<Vec<BigInt>>)> {
    let mut rows: Vec<BTreeMap<usize, T>> = vec![BTreeMap::new(); m.rows()];
    let mut cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.cols()];
    for (r, c, v) in m.iter() {
        rows[r].insert(c, T::from_big(v)?);
        cols[c].insert(r);
    }
    let mut row_alive = vec![true; m.rows()];
    let mut col_alive = vec![true; m.cols()];
    let mut units = 0;

    loop {
        let mut best: Option<(usize, usize, usize, usize)> = None;
        for (c, members) in cols.iter().enumerate() {
            if !col_alive[c] || members.is_empty() {
                continue;
            }
            if best.is_some_and(|(len, ..)| members.len() > len) {
                continue;
            }
            for &r in members {
                if rows[r][&c].is_unit() {
                    let key = (members.len(), rows[r].len(), c, r);
                    if best.is_none_or(|b| (key.0, key.1) < (b.0, b.1)) {
                        best = Some(key);
                    }
                }
            }
        }
        let Some((_, _, pc, pr)) = best else { break };
        let pivot_row = std::mem::take(&mut rows[pr]);
        let pivot = pivot_row[&pc].clone();
        let targets: Vec<usize> = cols[pc].iter().copied().filter(|&r| r != pr).collect();
        for t in targets {
            let factor = rows[t][&pc].checked_mul(&pivot)?;
            for (&c, v) in &pivot_row {
                let delta = factor.checked_mul(v)?;
                let current = rows[t].get(&c).cloned();
                let updated = match current {
                    Some(x) => x.checked_sub(&delta)?,
                    None => T::nil().checked_sub(&delta)?,
                };
                if updated.is_nil() {
                    rows[t].remove(&c);
                    cols[c].remove(&t);
                } else {
                    rows[t].insert(c, updated);
                    cols[c].insert(t);
                }
            }
        }
        for &c in pivot_row.keys() {
            cols[c].remove(&pr);
        }
        row_alive[pr] = false;
        col_alive[pc] = false;
        cols[pc].clear();
        units += 1;
    }

    let live_cols: Vec<usize> = (0..m.cols()).filter(|&c| col_alive[c] && !cols[c].is_empty()).collect();
    let col_index: BTreeMap<usize, usize> = live_cols.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let live_rows: Vec<usize> = (0..m.rows()).filter(|&r| row_alive[r] && !rows[r].is_empty()).collect();
    let rest = live_rows
        .into_iter()
        .map(|r| {
            let mut dense = vec![BigInt::zero(); live_cols.len()];
            for (c, v) in std::mem::take(&mut rows[r]) {
                dense[col_index[&c]] = v.into_big();
            }
            dense
        })
        .collect();
    Some((units, rest))
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn diagonal(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len().min(a.first().map_or(0, Vec::len));
    (0..n).map(|i| a[i][i].clone()).take_while(|d| !d.is_zero()).collect()
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// `row[dst] -= q * row[src]`.
fn row_axpy(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    let (s, d) = if src < dst {
        let (lo, hi) = a.split_at_mut(dst);
        (&lo[src], &mut hi[0])
    } else {
        let (lo, hi) = a.split_at_mut(src);
        (&hi[0], &mut lo[dst])
    };
    for (x, y) in d.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

/// `col[dst] -= q * col[src]`.
fn col_axpy(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    for row in a.iter_mut() {
        if !row[src].is_zero() {
            let delta = q * &row[src];
            row[dst] -= delta;
        }
    }
}

/// Reduces `a` in place to Smith form. The returned `u`, `v` satisfy
/// `u · a_in · v = a_out` when requested.
fn dense_snf(a: &mut [Vec<BigInt>], n: usize, want: bool) -> (Option<Vec<Vec<BigInt>>>, Option<Vec<Vec<BigInt>>>) {
    let m = a.len();
    let mut u = want.then(|| identity(m));
    let mut v = want.then(|| identity(n));

    for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, x) in row.iter().enumerate().skip(t) {
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return (u, v);
            };
            a.swap(t, bi);
            if let Some(u) = u.as_mut() {
                u.swap(t, bi);
            }
            swap_cols(a, t, bj);
            if let Some(v) = v.as_mut() {
                swap_cols(v, t, bj);
            }

            let mut dirty = false;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                row_axpy(a, i, t, &q);
                if let Some(u) = u.as_mut() {
                    row_axpy(u, i, t, &q);
                }
                dirty |= !a[i][t].is_zero();
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                col_axpy(a, j, t, &q);
                if let Some(v) = v.as_mut() {
                    col_axpy(v, j, t, &q);
                }
                dirty |= !a[t][j].is_zero();
            }
            if dirty {
                continue;
            }
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match offender {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(a, t, i, &minus_one);
                    if let Some(u) = u.as_mut() {
                        row_axpy(u, t, i, &minus_one);
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -std::mem::take(x);
            }
            if let Some(u) = u.as_mut() {
                for x in u[t].iter_mut() {
                    *x = -std::mem::take(x);
                }
            }
        }
    }
    (u, v)
}
