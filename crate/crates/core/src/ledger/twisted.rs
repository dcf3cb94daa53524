use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One of the three gluings `Σ_{1,0}`, `Σ_{0,1}`, `Σ_{1,-1}` written as `(l, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GluingPair {
    pub l: i32,
    pub m: i32,
}

impl GluingPair {
    pub const S10: GluingPair = GluingPair { l: 1, m: 0 };
    pub const S01: GluingPair = GluingPair { l: 0, m: 1 };
    pub const S1M1: GluingPair = GluingPair { l: 1, m: -1 };
    pub const ALL: [GluingPair; 3] = [GluingPair::S10, GluingPair::S01, GluingPair::S1M1];

    pub fn new(l: i32, m: i32) -> Result<Self> {
        let pair = GluingPair { l, m };
        if GluingPair::ALL.contains(&pair) {
            Ok(pair)
        } else {
            Err(Error::InvalidGluingPair { l, m })
        }
    }

    pub fn epsilon(self) -> i64 {
        i64::from(self == GluingPair::S1M1)
    }
}

impl fmt::Display for GluingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.l, self.m)
    }
}

impl FromStr for GluingPair {
    type Err = Error;

    /// Parses `"l,m"`, with or without parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Unknown {
            kind: "gluing pair",
            name: s.to_string(),
        };
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (l, m) = inner.split_once(',').ok_or_else(bad)?;
        GluingPair::new(l.trim().parse().map_err(|_| bad())?, m.trim().parse().map_err(|_| bad())?)
    }
}

/// `ε_{l,m}`: 1 for `(1,-1)` and 0 for `(1,0)`, `(0,1)`.
pub fn epsilon(l: i32, m: i32) -> Result<u8> {
    Ok(GluingPair::new(l, m)?.epsilon() as u8)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TwistedMode {
    #[serde(rename = "abs-iso-s01")]
    AbsIsoS01,
    #[serde(rename = "abs-surj")]
    AbsSurj,
    #[serde(rename = "abs-iso")]
    AbsIso,
    #[serde(rename = "rel-surj-s01")]
    RelSurjS01,
    #[serde(rename = "rel-iso-s01")]
    RelIsoS01,
    #[serde(rename = "rel-surj-s1-1")]
    RelSurjS1m1,
    #[serde(rename = "rel-iso-s1-1")]
    RelIsoS1m1,
}

impl TwistedMode {
    pub const ALL: [TwistedMode; 7] = [
        TwistedMode::AbsIsoS01,
        TwistedMode::AbsSurj,
        TwistedMode::AbsIso,
        TwistedMode::RelSurjS01,
        TwistedMode::RelIsoS01,
        TwistedMode::RelSurjS1m1,
        TwistedMode::RelIsoS1m1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TwistedMode::AbsIsoS01 => "abs-iso-s01",
            TwistedMode::AbsSurj => "abs-surj",
            TwistedMode::AbsIso => "abs-iso",
            TwistedMode::RelSurjS01 => "rel-surj-s01",
            TwistedMode::RelIsoS01 => "rel-iso-s01",
            TwistedMode::RelSurjS1m1 => "rel-surj-s1-1",
            TwistedMode::RelIsoS1m1 => "rel-iso-s1-1",
        }
    }

    /// The lower bound `2g >= 3n + k + offset`, with `offset` depending on ε.
    pub fn offset(self, eps: i64) -> i64 {
        match self {
            TwistedMode::AbsIsoS01 => 0,
            TwistedMode::AbsSurj => -eps,
            TwistedMode::AbsIso => 2,
            TwistedMode::RelSurjS01 => -2 - eps,
            TwistedMode::RelIsoS01 => -1 - eps,
            TwistedMode::RelSurjS1m1 => -3 - eps,
            TwistedMode::RelIsoS1m1 => -eps,
        }
    }
}

impl fmt::Display for TwistedMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TwistedMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TwistedMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "twisted mode",
                name: s.to_string(),
            })
    }
}

/// Whether `(n, k, g)` lies in the stable range of the given mode.
pub fn twisted_range(mode: TwistedMode, n: i64, k: i64, g: i64, pair: GluingPair) -> bool {
    2 * g >= 3 * n + k + mode.offset(pair.epsilon())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilon_values() {
        assert_eq!(epsilon(1, -1).unwrap(), 1);
        assert_eq!(epsilon(1, 0).unwrap(), 0);
        assert_eq!(epsilon(0, 1).unwrap(), 0);
        assert_eq!(epsilon(0, 0), Err(Error::InvalidGluingPair { l: 0, m: 0 }));
        assert!(epsilon(2, -1).is_err());
    }

    #[test]
    fn range_examples() {
        assert!(twisted_range(TwistedMode::AbsIsoS01, 2, 0, 3, GluingPair::S01));
        assert!(twisted_range(TwistedMode::RelSurjS1m1, 1, 0, 0, GluingPair::S1M1));
        assert!(!twisted_range(TwistedMode::AbsIso, 1, 0, 2, GluingPair::S1M1));
    }

    #[test]
    fn parsing() {
        assert_eq!("rel-iso-s1-1".parse::<TwistedMode>().unwrap(), TwistedMode::RelIsoS1m1);
        assert!("abs".parse::<TwistedMode>().is_err());
        assert_eq!("(1,-1)".parse::<GluingPair>().unwrap(), GluingPair::S1M1);
        assert!("1,1".parse::<GluingPair>().is_err());
    }
}
