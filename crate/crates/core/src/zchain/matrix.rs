use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Integer matrix storing only its nonzero entries, keyed by `(row, col)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl SparseIntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseIntMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SparseIntMatrix::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), BigInt::from(1));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn check(&self, row: usize, col: usize) -> Result<()> {
        if row >= self.rows || col >= self.cols {
            return Err(Error::IndexOutOfRange {
                row,
                col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    pub fn set(&mut self, row: usize, col: usize, value: impl Into<BigInt>) -> Result<()> {
        self.check(row, col)?;
        let value = value.into();
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
        Ok(())
    }

    pub fn add(&mut self, row: usize, col: usize, value: impl Into<BigInt>) -> Result<()> {
        self.check(row, col)?;
        let value = value.into();
        let slot = self.entries.entry((row, col)).or_default();
        *slot += value;
        if slot.is_zero() {
            self.entries.remove(&(row, col));
        }
        Ok(())
    }

    pub fn get(&self, row: usize, col: usize) -> BigInt {
        self.entries.get(&(row, col)).cloned().unwrap_or_default()
    }

    /// Nonzero entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    /// Nonzero entries of one column, by increasing row.
    pub fn column(&self, col: usize) -> Vec<(usize, BigInt)> {
        self.iter()
            .filter(|&(_, c, _)| c == col)
            .map(|(r, _, v)| (r, v.clone()))
            .collect()
    }

    pub fn transpose(&self) -> SparseIntMatrix {
        SparseIntMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| ((c, r), v.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &SparseIntMatrix) -> Result<SparseIntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DegreeMismatch {
                left: self.cols,
                right: other.rows,
            });
        }
        let mut by_row: Vec<Vec<(usize, &BigInt)>> = vec![Vec::new(); other.rows];
        for (r, c, v) in other.iter() {
            by_row[r].push((c, v));
        }
        let mut out = SparseIntMatrix::zeros(self.rows, other.cols);
        for (r, k, a) in self.iter() {
            for &(c, b) in &by_row[k] {
                out.add(r, c, a * b)?;
            }
        }
        Ok(out)
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut d = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (r, c, v) in self.iter() {
            d[r][c] = v.clone();
        }
        d
    }

    pub fn from_dense<T: Clone + Into<BigInt>>(rows: &[Vec<T>]) -> Result<SparseIntMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = SparseIntMatrix::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::MalformedMatrix(format!(
                    "row {r} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (c, v) in row.iter().enumerate() {
                m.set(r, c, v.clone())?;
            }
        }
        Ok(m)
    }

    /// Header line `{"rows":R,"cols":C}` followed by one `row col value` line
    /// per nonzero entry.
    pub fn to_triples(&self) -> String {
        let mut out = format!("{{\"rows\":{},\"cols\":{}}}\n", self.rows, self.cols);
        for (r, c, v) in self.iter() {
            writeln!(out, "{r} {c} {v}").expect("writing to a string");
        }
        out
    }

    pub fn from_triples(text: &str) -> Result<SparseIntMatrix> {
        #[derive(serde::Deserialize)]
        struct Header {
            rows: usize,
            cols: usize,
        }
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::MalformedMatrix("missing header".into()))?;
        let header: Header = serde_json::from_str(header)
            .map_err(|e| Error::MalformedMatrix(format!("bad header: {e}")))?;
        let mut m = SparseIntMatrix::zeros(header.rows, header.cols);
        for line in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [r, c, v] = fields[..] else {
                return Err(Error::MalformedMatrix(format!("bad entry line `{line}`")));
            };
            let bad = || Error::MalformedMatrix(format!("bad entry line `{line}`"));
            let r: usize = r.parse().map_err(|_| bad())?;
            let c: usize = c.parse().map_err(|_| bad())?;
            let v: BigInt = v.parse().map_err(|_| bad())?;
            m.add(r, c, v)?;
        }
        Ok(m)
    }
}

impl Serialize for SparseIntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<(usize, usize, IntValue<'_>)> =
            self.iter().map(|(r, c, v)| (r, c, IntValue(v))).collect();
        let mut s = serializer.serialize_struct("SparseIntMatrix", 3)?;
        s.serialize_field("rows", &self.rows)?;
        s.serialize_field("cols", &self.cols)?;
        s.serialize_field("entries", &entries)?;
        s.end()
    }
}

/// A big integer written as a JSON number when it fits in 64 bits and as a
/// decimal string otherwise.
pub struct IntValue<'a>(pub &'a BigInt);

impl Serialize for IntValue<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

pub(crate) mod int_list {
    use num_bigint::BigInt;
    use serde::Serializer;

    use super::IntValue;

    pub fn serialize<S: Serializer>(values: &[BigInt], serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(values.iter().map(IntValue))
    }
}
