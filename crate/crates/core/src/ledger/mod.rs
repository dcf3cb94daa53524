//! Mechanical bookkeeping for the stability arguments: inequality
//! obligations, twisted stable ranges and the exceptional parameter tuples.

pub mod exceptions;
pub mod obligations;
pub mod twisted;

use serde::Serialize;

pub use exceptions::{si_p_exceptions, ExceptionCase, ExceptionGrid, ExceptionTuple};
pub use obligations::{main_theorem_ledger, Branch};
pub use twisted::{epsilon, twisted_range, GluingPair, TwistedMode};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Params {
    pub branch: String,
    pub g: i64,
    pub r: i64,
    pub k: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<i64>,
}

/// One instantiated inequality `lhs >= rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Obligation {
    pub claim: String,
    pub anchor: String,
    pub params: Params,
    pub inequality: String,
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

impl Obligation {
    pub fn recheck(&self) -> bool {
        self.lhs >= self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonotonicityReport {
    pub checked: usize,
    pub violations: Vec<String>,
}

/// Checks upward closure in `g` of every twisted mode and that the absolute
/// isomorphism range lies inside the absolute surjectivity range, for
/// `0 <= n, k <= nk_max` and `0 <= g <= g_max`.
pub fn twisted_consistency(g_max: i64, nk_max: i64) -> MonotonicityReport {
    let mut checked = 0;
    let mut violations = Vec::new();
    for pair in GluingPair::ALL {
        for n in 0..=nk_max {
            for k in 0..=nk_max {
                for g in 0..=g_max {
                    for mode in TwistedMode::ALL {
                        checked += 1;
                        if twisted_range(mode, n, k, g, pair) && !twisted_range(mode, n, k, g + 1, pair) {
                            violations.push(format!("{mode} not upward closed at n={n} k={k} g={g} {pair}"));
                        }
                    }
                    checked += 1;
                    if twisted_range(TwistedMode::AbsIso, n, k, g, pair)
                        && !twisted_range(TwistedMode::AbsSurj, n, k, g, pair)
                    {
                        violations.push(format!("abs-iso without abs-surj at n={n} k={k} g={g} {pair}"));
                    }
                }
            }
        }
    }
    MonotonicityReport { checked, violations }
}
