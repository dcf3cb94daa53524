//! Surface types, arc classes and the closed-form invariants attached to them.
//!
//! An [`ArcClass`] with a degree-`p` permutation names an orbit of
//! `(p-1)`-simplices in the arc complex `C_*(F; i)`. Everything here is
//! stated in terms of `p` rather than the simplicial dimension.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SurfaceType {
    pub g: u32,
    pub r: u32,
}

impl SurfaceType {
    pub const fn new(g: u32, r: u32) -> Self {
        SurfaceType { g, r }
    }

    pub fn euler_char(&self) -> i64 {
        2 - 2 * i64::from(self.g) - i64::from(self.r)
    }
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{{{},{}}}", self.g, self.r)
    }
}

impl FromStr for SurfaceType {
    type Err = Error;

    /// Parses `"g,r"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Unknown {
            kind: "surface",
            name: s.to_string(),
        };
        let (g, r) = s.split_once(',').ok_or_else(bad)?;
        Ok(SurfaceType {
            g: g.trim().parse().map_err(|_| bad())?,
            r: r.trim().parse().map_err(|_| bad())?,
        })
    }
}

/// Whether the two endpoints of the arcs lie on one boundary circle (`One`)
/// or on two distinct ones (`Two`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub const BOTH: [Side; 2] = [Side::One, Side::Two];

    pub fn index(self) -> u32 {
        match self {
            Side::One => 1,
            Side::Two => 2,
        }
    }
}

impl TryFrom<u8> for Side {
    type Error = Error;

    fn try_from(v: u8) -> Result<Self> {
        match v {
            1 => Ok(Side::One),
            2 => Ok(Side::Two),
            other => Err(Error::InvalidSide(other)),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

impl Serialize for Side {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.index() as u8)
    }
}

impl<'de> Deserialize<'de> for Side {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let v = u8::deserialize(deserializer)?;
        Side::try_from(v).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ArcClass {
    pub perm: Perm,
    pub side: Side,
}

impl ArcClass {
    pub fn new(perm: Perm, side: Side) -> Self {
        ArcClass { perm, side }
    }

    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    /// Number of boundary components of a regular neighbourhood of the arcs
    /// together with the boundary circles they end on.
    pub fn boundary_of_neighborhood(&self) -> usize {
        let sigma = &self.perm;
        match self.side {
            Side::One => {
                let h = sigma.hat();
                let rot = Perm::rotation(h.degree());
                commutator_cycles(&rot, &h.inverse()) + 1
            }
            Side::Two => {
                let rot = Perm::rotation(sigma.degree());
                commutator_cycles(&rot, &sigma.inverse()) + 2
            }
        }
    }

    /// Genus of the arc neighbourhood.
    pub fn simplex_genus(&self) -> u32 {
        let numerator = self.degree() + 2 - self.boundary_of_neighborhood();
        assert!(
            numerator % 2 == 0,
            "odd genus numerator for {} on side {}",
            self.perm,
            self.side
        );
        (numerator / 2) as u32
    }

    pub fn realizable(&self, g: u32) -> bool {
        realizable_genus(self.degree(), self.side, g, self.simplex_genus())
    }

    /// The surface left after cutting `ambient` along a simplex of this class.
    pub fn cut_surface(&self, ambient: SurfaceType) -> Result<SurfaceType> {
        if ambient.r < self.side.index() {
            return Err(Error::TooFewBoundaries {
                surface: ambient,
                side: self.side,
            });
        }
        if !self.realizable(ambient.g) {
            return Err(Error::GenusDeficit {
                perm: self.perm.to_string(),
                side: self.side,
                genus: ambient.g,
            });
        }
        cut_surface_for_genus(ambient, self.degree(), self.side, self.simplex_genus())
    }

    /// The mapping class group of the cut surface labels the stabilizer.
    pub fn stabilizer_label(&self, ambient: SurfaceType) -> Result<SurfaceType> {
        self.cut_surface(ambient)
    }
}

/// `Cyc(a ∘ b ∘ a⁻¹ ∘ b⁻¹)`.
fn commutator_cycles(a: &Perm, b: &Perm) -> usize {
    let ab = a.compose(b).expect("equal degrees");
    let ab_ai = ab.compose(&a.inverse()).expect("equal degrees");
    ab_ai.compose(&b.inverse()).expect("equal degrees").cycle_count()
}

fn realizable_genus(p: usize, side: Side, g: u32, s: u32) -> bool {
    u64::from(s) + u64::from(g) + u64::from(side.index()) >= p as u64 + 1
}

/// Cut-surface arithmetic for a degree-`p` class of genus `s`, without
/// enumerating permutations. Fails when no such class exists at `ambient.g`.
pub fn cut_surface_for_genus(ambient: SurfaceType, p: usize, side: Side, s: u32) -> Result<SurfaceType> {
    if ambient.r < side.index() {
        return Err(Error::TooFewBoundaries {
            surface: ambient,
            side,
        });
    }
    if !realizable_genus(p, side, ambient.g, s) {
        return Err(Error::GenusDeficit {
            perm: format!("degree {p} genus {s}"),
            side,
            genus: ambient.g,
        });
    }
    let i = i64::from(side.index());
    let (g, r, s, p) = (i64::from(ambient.g), i64::from(ambient.r), i64::from(s), p as i64);
    let genus = g + s - (p + 1 - i);
    let boundary = r + p + 2 - 2 * s - 2 * i;
    assert!(genus >= 0, "negative cut genus");
    assert!(boundary >= 1, "cut surface without boundary from {ambient}");
    let cut = SurfaceType::new(genus as u32, boundary as u32);
    debug_assert_eq!(cut.euler_char(), ambient.euler_char() + p);
    Ok(cut)
}

/// All degree-`p` permutations realizable as arc simplices on a genus-`g`
/// surface, in lexicographic order.
pub fn realizable_perms(p: usize, side: Side, g: u32) -> Vec<Perm> {
    Perm::all(p)
        .filter(|sigma| ArcClass::new(sigma.clone(), side).realizable(g))
        .collect()
}

/// Smallest neighbourhood genus a realizable degree-`p` class can have.
pub fn min_realizable_genus(p: usize, side: Side, g: u32) -> u32 {
    (p as i64 + 1 - i64::from(g) - i64::from(side.index())).max(0) as u32
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Gluing {
    /// Glue a pair of pants along one leg.
    #[serde(rename = "s01")]
    S01,
    /// Glue a pair of pants along both legs.
    #[serde(rename = "s1-1")]
    S1m1,
    #[serde(rename = "s10")]
    S10,
    /// Cap a boundary circle with a disk.
    #[serde(rename = "s0-1")]
    S0m1,
    /// Cut along a non-separating simple closed curve.
    #[serde(rename = "circle-cut")]
    CircleCut,
}

impl Gluing {
    pub const ALL: [Gluing; 5] = [
        Gluing::S01,
        Gluing::S1m1,
        Gluing::S10,
        Gluing::S0m1,
        Gluing::CircleCut,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Gluing::S01 => "s01",
            Gluing::S1m1 => "s1-1",
            Gluing::S10 => "s10",
            Gluing::S0m1 => "s0-1",
            Gluing::CircleCut => "circle-cut",
        }
    }

    pub fn apply(self, s: SurfaceType) -> Result<SurfaceType> {
        let undefined = || Error::GluingUndefined {
            op: self.name().to_string(),
            surface: s,
        };
        let SurfaceType { g, r } = s;
        match self {
            Gluing::S01 if r >= 1 => Ok(SurfaceType::new(g, r + 1)),
            Gluing::S1m1 if r >= 2 => Ok(SurfaceType::new(g + 1, r - 1)),
            Gluing::S10 if r >= 1 => Ok(SurfaceType::new(g + 1, r)),
            Gluing::S0m1 if r >= 1 => Ok(SurfaceType::new(g, r - 1)),
            Gluing::CircleCut if g >= 1 => Ok(SurfaceType::new(g - 1, r + 2)),
            _ => Err(undefined()),
        }
    }
}

impl fmt::Display for Gluing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Gluing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Gluing::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "gluing",
                name: s.to_string(),
            })
    }
}
