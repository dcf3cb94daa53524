use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::complex::exact_range_top;
use crate::error::{Error, Result};
use crate::perm::{FormalSum, Perm};
use crate::surface::{ArcClass, Side};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomotopyReport {
    /// Degrees checked, inclusive.
    pub degrees: (usize, usize),
    pub checked: usize,
    pub failures: Vec<Perm>,
}

impl HomotopyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(mut self, other: HomotopyReport) -> HomotopyReport {
        self.degrees = (self.degrees.0.min(other.degrees.0), self.degrees.1.max(other.degrees.1));
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self
    }
}

fn check_all<I, F>(degrees: (usize, usize), perms: I, holds: F) -> HomotopyReport
where
    I: IntoParallelIterator<Item = Perm>,
    F: Fn(&Perm) -> bool + Sync,
{
    let results: Vec<(Perm, bool)> = perms
        .into_par_iter()
        .map(|sigma| {
            let ok = holds(&sigma);
            (sigma, ok)
        })
        .collect();
    HomotopyReport {
        degrees,
        checked: results.len(),
        failures: results.into_iter().filter(|(_, ok)| !ok).map(|(p, _)| p).collect(),
    }
}

fn homotopy_holds(sigma: &Perm) -> bool {
    let mut lhs = sigma.homotopy_d().boundary().expect("degree at least 2");
    lhs.add_sum(1, &sigma.boundary().expect("degree at least 2").homotopy_d());
    lhs == FormalSum::single(sigma.clone())
}

/// Checks `∂D + D∂ = id` on every permutation of degree `2..=max_degree`.
pub fn verify_homotopy(max_degree: usize) -> HomotopyReport {
    let mut report = HomotopyReport {
        degrees: (2, max_degree.max(2)),
        checked: 0,
        failures: Vec::new(),
    };
    for k in 2..=max_degree {
        let perms: Vec<Perm> = Perm::all(k).collect();
        report = report.merge(check_all((k, k), perms, homotopy_holds));
    }
    report
}

/// Uniformly random permutations of one degree, reproducible from `seed`.
pub fn sample_perms(degree: usize, count: usize, seed: u64) -> Vec<Perm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut images: Vec<usize> = (0..degree).collect();
            images.shuffle(&mut rng);
            Perm::from_images_unchecked(images)
        })
        .collect()
}

/// Checks `∂D + D∂ = id` on `samples` random permutations of degree `k`.
pub fn verify_homotopy_sampled(k: usize, samples: usize, seed: u64) -> HomotopyReport {
    assert!(k >= 2, "the homotopy identity starts in degree 2");
    check_all((k, k), sample_perms(k, samples, seed), homotopy_holds)
}

/// Contracting homotopy on the realizable subcomplex.
///
/// Agrees with `D` except on the identity of the top exact degree, whose
/// hat is not realizable. There it is replaced by zero or by
/// `τ = [2 0 1 3 4 ...]`, whichever has the same boundary as the hat.
pub fn dbar(sigma: &Perm, g: u32, side: Side) -> FormalSum {
    let hat = sigma.hat();
    if ArcClass::new(hat.clone(), side).realizable(g) {
        return FormalSum::single(hat);
    }
    assert!(
        sigma.is_identity(),
        "{sigma} is the only kind of class whose hat can fail to be realizable"
    );
    let degree = hat.degree();
    if degree % 2 == 0 {
        FormalSum::zero()
    } else {
        FormalSum::single(tau(degree))
    }
}

/// `[2 0 1 3 4 ... k-1]`.
pub fn tau(degree: usize) -> Perm {
    assert!(degree >= 3, "tau needs degree at least 3");
    let mut images = vec![2, 0, 1];
    images.extend(3..degree);
    Perm::from_images_unchecked(images)
}

fn dbar_sum(s: &FormalSum, g: u32, side: Side) -> FormalSum {
    let mut out = FormalSum::zero();
    for (p, c) in s.iter() {
        out.add_sum(c, &dbar(p, g, side));
    }
    out
}

fn all_realizable(s: &FormalSum, g: u32, side: Side) -> bool {
    s.iter().all(|(p, _)| ArcClass::new(p.clone(), side).realizable(g))
}

/// Checks `D̄∂ + ∂D̄ = id` on the realizable basis in the exact range
/// (perm degrees `2..=g+i-1`) and that `D̄` stays inside the subcomplex.
pub fn verify_quotient_homotopy(g: u32, side: Side) -> Result<HomotopyReport> {
    if g < 2 {
        return Err(Error::GenusTooSmall { genus: g, required: 2 });
    }
    let top = exact_range_top(g, side);
    let mut report = HomotopyReport {
        degrees: (2, top),
        checked: 0,
        failures: Vec::new(),
    };
    for k in 2..=top {
        let perms = crate::surface::realizable_perms(k, side, g);
        report = report.merge(check_all((k, k), perms, |sigma| {
            let up = dbar(sigma, g, side);
            if !all_realizable(&up, g, side) {
                return false;
            }
            let mut lhs = up.boundary().expect("degree at least 3");
            lhs.add_sum(1, &dbar_sum(&sigma.boundary().expect("degree at least 2"), g, side));
            lhs == FormalSum::single(sigma.clone())
        }));
    }
    Ok(report)
}
