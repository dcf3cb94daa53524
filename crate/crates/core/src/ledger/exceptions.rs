//! Brute-force search for the parameter tuples at which the realizable
//! permutation sets fall short of what the twisted stability argument needs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::twisted::GluingPair;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::surface::{ArcClass, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ExceptionCase {
    #[serde(rename = "surj-s01")]
    SurjS01,
    #[serde(rename = "surj-s1-1")]
    SurjS1m1,
    #[serde(rename = "inj-s1-1")]
    InjS1m1,
}

impl ExceptionCase {
    pub const ALL: [ExceptionCase; 3] = [ExceptionCase::SurjS01, ExceptionCase::SurjS1m1, ExceptionCase::InjS1m1];

    pub fn name(self) -> &'static str {
        match self {
            ExceptionCase::SurjS01 => "surj-s01",
            ExceptionCase::SurjS1m1 => "surj-s1-1",
            ExceptionCase::InjS1m1 => "inj-s1-1",
        }
    }

    /// Offset in the hypothesis `2g >= 3n + k + offset`.
    fn bound_offset(self, eps: i64) -> i64 {
        match self {
            ExceptionCase::SurjS01 => -2 - eps,
            ExceptionCase::SurjS1m1 => -3 - eps,
            ExceptionCase::InjS1m1 => -eps,
        }
    }

    /// The degrees that must be fully realizable, and the degree (if any)
    /// in which only the positive-genus permutations must be.
    fn requirements(self, n: usize) -> (std::ops::RangeInclusive<usize>, Option<usize>) {
        match self {
            ExceptionCase::SurjS01 => (2..=if n == 1 { 3 } else { n + 1 }, None),
            ExceptionCase::SurjS1m1 => (2..=n + 1, (n + 2 <= 4).then_some(n + 2)),
            ExceptionCase::InjS1m1 => (2..=n + 2, (n + 3 == 4).then_some(4)),
        }
    }

    /// The arc complex the orbits live in: the surface it is built on has
    /// genus `g` (side 2) for `Σ_{0,1}` and `g + 1` (side 1) for `Σ_{1,-1}`.
    fn complex(self, g: u32) -> (u32, Side) {
        match self {
            ExceptionCase::SurjS01 => (g, Side::Two),
            ExceptionCase::SurjS1m1 | ExceptionCase::InjS1m1 => (g + 1, Side::One),
        }
    }

    /// The tuples `(pair, n, g, k)` listed as exceptions.
    pub fn expected(self) -> Vec<ExceptionTuple> {
        let (s10, s01, s1m1) = (GluingPair::S10, GluingPair::S01, GluingPair::S1M1);
        let raw: &[(GluingPair, u32, u32, u32)] = match self {
            ExceptionCase::SurjS01 => &[
                (s10, 1, 1, 0),
                (s10, 1, 1, 1),
                (s01, 1, 1, 0),
                (s01, 1, 1, 1),
                (s1m1, 1, 0, 0),
                (s1m1, 1, 1, 0),
                (s1m1, 1, 1, 1),
                (s1m1, 1, 1, 2),
            ],
            ExceptionCase::SurjS1m1 => &[
                (s10, 1, 0, 0),
                (s01, 1, 0, 0),
                (s1m1, 1, 0, 0),
                (s1m1, 1, 0, 1),
                (s1m1, 2, 1, 0),
            ],
            ExceptionCase::InjS1m1 => &[(s1m1, 1, 1, 0)],
        };
        let mut out: Vec<ExceptionTuple> = raw
            .iter()
            .map(|&(pair, n, g, k)| ExceptionTuple {
                case: self,
                pair,
                n,
                g,
                k,
            })
            .collect();
        out.sort();
        out
    }
}

impl fmt::Display for ExceptionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExceptionCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ExceptionCase::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "exception case",
                name: s.to_string(),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ExceptionTuple {
    pub case: ExceptionCase,
    pub pair: GluingPair,
    pub n: u32,
    pub g: u32,
    pub k: u32,
}

/// Search limits for [`si_p_exceptions`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExceptionGrid {
    pub n_max: u32,
    pub g_max: u32,
    pub k_max: u32,
}

impl Default for ExceptionGrid {
    fn default() -> Self {
        ExceptionGrid {
            n_max: 5,
            g_max: 12,
            k_max: 12,
        }
    }
}

/// Smallest neighbourhood genus over `Σ_p`, and over its positive-genus part.
fn min_genera(p: usize, side: Side) -> (u32, Option<u32>) {
    let genera: Vec<u32> = Perm::all(p)
        .map(|sigma| ArcClass::new(sigma, side).simplex_genus())
        .collect();
    (
        genera.iter().copied().min().expect("nonempty"),
        genera.iter().copied().filter(|&s| s >= 1).min(),
    )
}

fn realizable_with(p: usize, side: Side, genus: u32, s: u32) -> bool {
    u64::from(s) + u64::from(genus) + u64::from(side.index()) > p as u64
}

pub fn si_p_exceptions(case: ExceptionCase, grid: ExceptionGrid) -> Vec<ExceptionTuple> {
    let top = grid.n_max as usize + 3;
    let mut tables = [vec![(0, None); top + 1], vec![(0, None); top + 1]];
    for (t, side) in Side::BOTH.into_iter().enumerate() {
        for p in 1..=top {
            tables[t][p] = min_genera(p, side);
        }
    }
    let mut out = BTreeSet::new();
    for pair in GluingPair::ALL {
        for n in 1..=grid.n_max {
            for g in 0..=grid.g_max {
                for k in 0..=grid.k_max {
                    let lhs = 2 * i64::from(g);
                    let rhs = 3 * i64::from(n) + i64::from(k) + case.bound_offset(pair.epsilon());
                    if lhs < rhs {
                        continue;
                    }
                    let (genus, side) = case.complex(g);
                    let table = &tables[side.index() as usize - 1];
                    let (full, partial) = case.requirements(n as usize);
                    let full_ok = full.clone().all(|p| realizable_with(p, side, genus, table[p].0));
                    let partial_ok = partial.is_none_or(|p| {
                        table[p].1.is_none_or(|s| realizable_with(p, side, genus, s))
                    });
                    if !(full_ok && partial_ok) {
                        out.insert(ExceptionTuple { case, pair, n, g, k });
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_match() {
        for case in ExceptionCase::ALL {
            assert_eq!(si_p_exceptions(case, ExceptionGrid::default()), case.expected(), "{case}");
        }
    }

    #[test]
    fn injective_case_is_a_single_tuple() {
        let found = si_p_exceptions(ExceptionCase::InjS1m1, ExceptionGrid::default());
        assert_eq!(found.len(), 1);
        assert_eq!((found[0].pair, found[0].n, found[0].g, found[0].k), (GluingPair::S1M1, 1, 1, 0));
    }
}
