//! E¹ page skeletons of the spectral sequence for the action of the mapping
//! class group on the arc complex, with trivial coefficients.
//!
//! Column `p` of the page is indexed by the realizable degree-`p`
//! permutations; each summand is labelled by the surface whose mapping class
//! group is its stabilizer. No homology groups are computed.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{sign, Perm};
use crate::surface::{realizable_perms, ArcClass, Side, SurfaceType};
use crate::zchain::{boundary_matrix, SparseIntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub perm: Perm,
    #[serde(rename = "S")]
    pub genus: u32,
    pub stabilizer: SurfaceType,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct E1Row {
    pub p: usize,
    pub summands: Vec<Summand>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct E1Page {
    pub ambient: SurfaceType,
    pub side: Side,
    pub rows: Vec<E1Row>,
    /// The page converges to zero for `p + q <= vanishing_bound`.
    pub vanishing_bound: u32,
}

impl E1Page {
    pub fn row(&self, p: usize) -> Option<&E1Row> {
        self.rows.iter().find(|row| row.p == p)
    }

    pub fn perms(&self, p: usize) -> Option<Vec<Perm>> {
        self.row(p)
            .map(|row| row.summands.iter().map(|s| s.perm.clone()).collect())
    }

    /// One line per `p`, summands separated by two spaces.
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "ambient {} side {} vanishing p+q <= {}\n",
            self.ambient, self.side, self.vanishing_bound
        );
        let width = self.rows.iter().map(|r| r.p.to_string().len()).max().unwrap_or(1);
        for row in &self.rows {
            let cells: Vec<String> = row
                .summands
                .iter()
                .map(|s| format!("{} S={} {}", s.perm, s.genus, s.stabilizer))
                .collect();
            writeln!(out, "p={:>width$} | {}", row.p, cells.join("  ")).expect("string write");
        }
        out
    }
}

/// Builds the page for `ambient` on the given side, with columns
/// `1..=min(max_p, vanishing_bound)`.
pub fn e1_skeleton(ambient: SurfaceType, side: Side, max_p: usize) -> Result<E1Page> {
    if ambient.r < side.index() {
        return Err(Error::TooFewBoundaries {
            surface: ambient,
            side,
        });
    }
    if ambient.g < 2 {
        return Err(Error::GenusTooSmall {
            genus: ambient.g,
            required: 2,
        });
    }
    let vanishing_bound = 2 * ambient.g - 2 + side.index();
    let top = max_p.min(vanishing_bound as usize);
    let rows = (1..=top)
        .into_par_iter()
        .map(|p| {
            let summands = realizable_perms(p, side, ambient.g)
                .into_iter()
                .map(|perm| {
                    let class = ArcClass::new(perm.clone(), side);
                    Summand {
                        genus: class.simplex_genus(),
                        stabilizer: class.stabilizer_label(ambient).expect("realizable class"),
                        perm,
                    }
                })
                .collect();
            E1Row { p, summands }
        })
        .collect();
    Ok(E1Page {
        ambient,
        side,
        rows,
        vanishing_bound,
    })
}

/// The trivial-coefficient shadow of `d¹ : E¹_p → E¹_{p-1}`.
pub fn d1_matrix(page: &E1Page, p: usize) -> Result<SparseIntMatrix> {
    if p < 2 {
        return Err(Error::MissingDegree(p));
    }
    let source = page.perms(p).ok_or(Error::MissingDegree(p))?;
    let target = page.perms(p - 1).ok_or(Error::MissingDegree(p - 1))?;
    Ok(boundary_matrix(&source, &target))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurvivingFace {
    pub sign: i64,
    pub face: usize,
    pub target: Perm,
}

/// Signed faces of `sigma` left after cancelling each adjacent pair
/// `∂_k = ∂_{k+1}`, which occurs exactly when `σ(k)` and `σ(k+1)` are
/// consecutive values. Runs of such pairs cancel greedily from the left.
pub fn cancellation_report(sigma: &Perm) -> Vec<SurvivingFace> {
    let k = sigma.degree();
    if k < 2 {
        return Vec::new();
    }
    let img = sigma.images();
    let mut out = Vec::new();
    let mut j = 0;
    while j < k {
        if j + 1 < k && img[j].abs_diff(img[j + 1]) == 1 {
            j += 2;
            continue;
        }
        out.push(SurvivingFace {
            sign: sign(j),
            face: j,
            target: sigma.face(j).expect("index in range"),
        });
        j += 1;
    }
    out
}
