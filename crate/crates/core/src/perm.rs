//! Permutations in one-line notation and the formal boundary calculus on
//! the permutation chain complex.
//!
//! A [`Perm`] of degree `k` is a bijection of `{0, ..., k-1}` stored as its
//! image word `[σ(0) σ(1) ... σ(k-1)]`. Composition applies the right factor
//! first: `a.compose(&b)(x) == a(b(x))`.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        if degree == 0 {
            return Err(Error::EmptyPermutation);
        }
        let mut seen = vec![false; degree];
        for &v in &images {
            if v >= degree || seen[v] {
                return Err(Error::NotAPermutation { images, degree });
            }
            seen[v] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from a word already known to be a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Perm::new(images.clone()).is_ok());
        Perm { images }
    }

    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "permutation degree must be at least 1");
        Perm {
            images: (0..degree).collect(),
        }
    }

    /// The cyclic shift `[1 2 ... k-1 0]`.
    pub fn rotation(degree: usize) -> Self {
        assert!(degree >= 1, "permutation degree must be at least 1");
        Perm {
            images: (0..degree).map(|j| (j + 1) % degree).collect(),
        }
    }

    /// Parses comma- or whitespace-separated one-line notation, e.g. `"1,2,0"`.
    pub fn parse(text: &str) -> Result<Self> {
        let images = text
            .trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>().map_err(|_| Error::Unknown {
                    kind: "permutation entry",
                    name: s.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &v)| j == v)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (j, &v) in self.images.iter().enumerate() {
            inv[v] = j;
        }
        Perm { images: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Perm {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    /// Number of orbits on `{0, ..., k-1}`, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut cycles = 0;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
            }
        }
        cycles
    }

    /// Prepends a fixed point: `hat(t) = [0, t(0)+1, ..., t(k-1)+1]`.
    pub fn hat(&self) -> Perm {
        let mut images = Vec::with_capacity(self.degree() + 1);
        images.push(0);
        images.extend(self.images.iter().map(|&v| v + 1));
        Perm { images }
    }

    /// `true` when `self` is a power of [`Perm::rotation`].
    pub fn is_rotation_power(&self) -> bool {
        let k = self.degree();
        let shift = self.images[0];
        self.images
            .iter()
            .enumerate()
            .all(|(j, &v)| v == (j + shift) % k)
    }

    /// Deletes the entry at position `j` and renumbers the remaining values
    /// by subtracting one from those exceeding the deleted value.
    pub fn face(&self, j: usize) -> Result<Perm> {
        let k = self.degree();
        if k < 2 {
            return Err(Error::NoFaces(k));
        }
        if j >= k {
            return Err(Error::FaceOutOfRange {
                index: j,
                degree: k,
            });
        }
        let removed = self.images[j];
        let images = self
            .images
            .iter()
            .enumerate()
            .filter(|&(pos, _)| pos != j)
            .map(|(_, &v)| if v > removed { v - 1 } else { v })
            .collect();
        Ok(Perm { images })
    }

    /// The alternating sum of faces `Σ_j (-1)^j face(j)`.
    pub fn boundary(&self) -> Result<FormalSum> {
        let k = self.degree();
        if k < 2 {
            return Err(Error::NoFaces(k));
        }
        let mut sum = FormalSum::zero();
        for j in 0..k {
            sum.add_term(sign(j), self.face(j)?);
        }
        Ok(sum)
    }

    /// The contracting homotopy `D(σ) = hat(σ)`.
    pub fn homotopy_d(&self) -> Perm {
        self.hat()
    }

    /// All permutations of the given degree in lexicographic order.
    pub fn all(degree: usize) -> impl Iterator<Item = Perm> {
        (0..degree)
            .permutations(degree)
            .map(|images| Perm { images })
    }
}

pub(crate) fn sign(j: usize) -> i64 {
    if j % 2 == 0 {
        1
    } else {
        -1
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(" "))
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Perm::new(images).map_err(serde::de::Error::custom)
    }
}

/// A finite integer combination of permutations of one degree.
///
/// Equal basis terms merge on insertion and zero coefficients are dropped, so
/// two sums are equal exactly when they are equal as chains.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FormalSum {
    terms: BTreeMap<Perm, i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: i64,
    pub perm: Perm,
}

impl FormalSum {
    pub fn zero() -> Self {
        FormalSum::default()
    }

    pub fn single(perm: Perm) -> Self {
        let mut sum = FormalSum::zero();
        sum.add_term(1, perm);
        sum
    }

    pub fn add_term(&mut self, coeff: i64, perm: Perm) {
        if coeff == 0 {
            return;
        }
        if let Some(d) = self.degree() {
            assert_eq!(d, perm.degree(), "formal sum terms must share a degree");
        }
        match self.terms.entry(perm) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn add_sum(&mut self, coeff: i64, other: &FormalSum) {
        for (p, &c) in &other.terms {
            self.add_term(coeff * c, p.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Perm::degree)
    }

    pub fn coefficient(&self, perm: &Perm) -> i64 {
        self.terms.get(perm).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic order of their permutations.
    pub fn iter(&self) -> impl Iterator<Item = (&Perm, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn terms(&self) -> Vec<Term> {
        self.iter()
            .map(|(p, coeff)| Term {
                coeff,
                perm: p.clone(),
            })
            .collect()
    }

    /// Linear extension of [`Perm::boundary`]; terms of degree 1 are rejected.
    pub fn boundary(&self) -> Result<FormalSum> {
        let mut out = FormalSum::zero();
        for (p, c) in self.iter() {
            out.add_sum(c, &p.boundary()?);
        }
        Ok(out)
    }

    /// Linear extension of [`Perm::homotopy_d`].
    pub fn homotopy_d(&self) -> FormalSum {
        let mut out = FormalSum::zero();
        for (p, c) in self.iter() {
            out.add_term(c, p.homotopy_d());
        }
        out
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.iter().enumerate() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if i > 0 || c < 0 {
                write!(f, "{}{}", if i > 0 { " " } else { "" }, sign)?;
                if i > 0 {
                    write!(f, " ")?;
                }
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl Serialize for FormalSum {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.terms().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FormalSum {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let terms = Vec::<Term>::deserialize(deserializer)?;
        let mut sum = FormalSum::zero();
        for t in terms {
            if sum.degree().is_some_and(|d| d != t.perm.degree()) {
                return Err(serde::de::Error::custom("formal sum terms of mixed degree"));
            }
            sum.add_term(t.coeff, t.perm);
        }
        Ok(sum)
    }
}
