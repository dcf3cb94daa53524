use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::matrix::{int_list, SparseIntMatrix};
use super::snf::{snf, SnfResult};
use crate::error::{Error, Result};
use crate::perm::{sign, Perm};
use crate::surface::{realizable_perms, Side};

/// Graded complex with a permutation basis in each degree `1..=max_degree`.
/// Degree `p` holds permutations of degree `p`; `∂_1` is the zero map.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    bases: Vec<Vec<Perm>>,
    boundaries: Vec<SparseIntMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub degree: usize,
    pub betti: usize,
    #[serde(serialize_with = "int_list::serialize")]
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl ChainComplex {
    /// Builds the complex on the given bases; each must be closed under faces.
    pub fn from_bases(bases: Vec<Vec<Perm>>) -> ChainComplex {
        let mut boundaries = vec![SparseIntMatrix::zeros(0, bases.first().map_or(0, Vec::len))];
        for p in 2..=bases.len() {
            boundaries.push(boundary_matrix(&bases[p - 1], &bases[p - 2]));
        }
        ChainComplex { bases, boundaries }
    }

    pub fn max_degree(&self) -> usize {
        self.bases.len()
    }

    pub fn basis(&self, p: usize) -> Result<&[Perm]> {
        p.checked_sub(1)
            .and_then(|i| self.bases.get(i))
            .map(Vec::as_slice)
            .ok_or(Error::MissingDegree(p))
    }

    pub fn dim(&self, p: usize) -> Result<usize> {
        self.basis(p).map(<[Perm]>::len)
    }

    /// `∂_p` as a `dim(p-1) × dim(p)` matrix (zero rows when `p = 1`).
    pub fn boundary(&self, p: usize) -> Result<&SparseIntMatrix> {
        p.checked_sub(1)
            .and_then(|i| self.boundaries.get(i))
            .ok_or(Error::MissingDegree(p))
    }

    pub fn homology(&self, p: usize) -> Result<HomologyGroup> {
        let here = snf(self.boundary(p)?, false);
        let above = snf(self.boundary(p + 1)?, false);
        Ok(group(p, self.dim(p)?, &here, &above))
    }

    /// Homology in every degree `1..max_degree`, computing each Smith form once.
    pub fn homology_all(&self) -> Vec<HomologyGroup> {
        let forms: Vec<SnfResult> = self.boundaries.par_iter().map(|m| snf(m, false)).collect();
        (1..self.max_degree())
            .map(|p| group(p, self.bases[p - 1].len(), &forms[p - 1], &forms[p]))
            .collect()
    }

    /// Whether `∂_{p-1} ∂_p` vanishes for every `p`.
    pub fn is_complex(&self) -> bool {
        (3..=self.max_degree()).all(|p| {
            self.boundaries[p - 2]
                .mul(&self.boundaries[p - 1])
                .expect("composable boundaries")
                .is_zero()
        })
    }
}

fn group(p: usize, dim: usize, here: &SnfResult, above: &SnfResult) -> HomologyGroup {
    assert!(here.rank + above.rank <= dim, "ranks exceed dimension in degree {p}");
    HomologyGroup {
        degree: p,
        betti: dim - here.rank - above.rank,
        torsion: above.torsion(),
    }
}

/// Matrix of the alternating face sum from `source` to `target`, whose
/// `(τ, σ)` entry sums `(-1)^j` over the faces `∂_j σ = τ`.
pub fn boundary_matrix(source: &[Perm], target: &[Perm]) -> SparseIntMatrix {
    let index: HashMap<&Perm, usize> = target.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let columns: Vec<Vec<(usize, i64)>> = source
        .par_iter()
        .map(|sigma| {
            let mut col: Vec<(usize, i64)> = Vec::with_capacity(sigma.degree());
            for j in 0..sigma.degree() {
                let face = sigma.face(j).expect("degree at least 2");
                let row = *index
                    .get(&face)
                    .unwrap_or_else(|| panic!("face {face} of {sigma} missing from basis"));
                col.push((row, sign(j)));
            }
            col
        })
        .collect();
    let mut m = SparseIntMatrix::zeros(target.len(), source.len());
    for (c, col) in columns.into_iter().enumerate() {
        for (r, v) in col {
            m.add(r, c, v).expect("index in range");
        }
    }
    m
}

/// `ℤΣ_*` in degrees `1..=max_degree`.
pub fn perm_complex(max_degree: usize) -> ChainComplex {
    assert!(max_degree >= 1, "complex needs at least one degree");
    ChainComplex::from_bases((1..=max_degree).map(|p| Perm::all(p).collect()).collect())
}

/// The subcomplex spanned by permutations realizable on a genus-`g` surface.
pub fn quotient_complex(g: u32, side: Side, max_degree: usize) -> Result<ChainComplex> {
    if g < 2 {
        return Err(Error::GenusTooSmall { genus: g, required: 2 });
    }
    assert!(max_degree >= 1, "complex needs at least one degree");
    let bases = (1..=max_degree)
        .into_par_iter()
        .map(|p| realizable_perms(p, side, g))
        .collect();
    Ok(ChainComplex::from_bases(bases))
}

/// Top perm degree of the range in which the quotient complex is exact.
pub fn exact_range_top(g: u32, side: Side) -> usize {
    (g + side.index() - 1) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_complex_sizes() {
        let c = perm_complex(4);
        let dims: Vec<usize> = (1..=4).map(|p| c.dim(p).unwrap()).collect();
        assert_eq!(dims, vec![1, 2, 6, 24]);
        assert!(c.is_complex());
    }

    #[test]
    fn missing_degrees() {
        let c = perm_complex(3);
        assert_eq!(c.homology(3), Err(Error::MissingDegree(4)));
        assert_eq!(c.dim(0), Err(Error::MissingDegree(0)));
        assert!(quotient_complex(1, Side::One, 3).is_err());
    }

    #[test]
    fn single_degree_complex() {
        let c = ChainComplex::from_bases(vec![vec![Perm::identity(1)], vec![]]);
        let h = c.homology(1).unwrap();
        assert_eq!((h.betti, h.torsion.len()), (1, 0));
    }

    #[test]
    fn full_complex_exact() {
        let c = perm_complex(6);
        for h in c.homology_all().into_iter().skip(1) {
            assert!(h.is_trivial(), "{h:?}");
        }
        assert!(c.homology(3).unwrap().is_trivial());
    }

    #[test]
    fn quotient_bases() {
        let c = quotient_complex(2, Side::One, 4).unwrap();
        assert!(!c.basis(4).unwrap().contains(&Perm::identity(4)));
        for g in 2..5 {
            for side in Side::BOTH {
                let c = quotient_complex(g, side, 5).unwrap();
                for p in 1..=exact_range_top(g, side).min(5) {
                    assert_eq!(c.dim(p).unwrap(), (1..=p).product::<usize>());
                }
            }
        }
        let c = quotient_complex(2, Side::One, 3).unwrap();
        assert!(c.homology(2).unwrap().is_trivial());
    }
}
