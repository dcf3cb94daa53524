//! The inequalities used by the inductive proof of homological stability
//! for `Σ_{0,1}` and `Σ_{1,-1}`, instantiated over a finite grid.

use rayon::prelude::*;
use serde::Serialize;

use super::{Obligation, Params};
use crate::surface::{cut_surface_for_genus, min_realizable_genus, Side, SurfaceType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Branch {
    #[serde(rename = "s01-iso")]
    S01Iso,
    #[serde(rename = "s1-1-surj")]
    S1m1Surj,
    #[serde(rename = "s1-1-iso")]
    S1m1Iso,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::S01Iso => "s01-iso",
            Branch::S1m1Surj => "s1-1-surj",
            Branch::S1m1Iso => "s1-1-iso",
        }
    }

    /// Whether `(g, k)` satisfies the hypothesis of the branch, with `g`
    /// the genus of the source surface.
    pub fn hypothesis(self, g: i64, k: i64) -> bool {
        match self {
            Branch::S01Iso => 2 * g >= 3 * k,
            Branch::S1m1Surj => 2 * g >= 3 * k - 1,
            Branch::S1m1Iso => 2 * g >= 3 * k + 2,
        }
    }
}

const S01_RANGE: &str = "is an isomorphism for 2g >= 3k";
const S1M1_RANGE: &str = "surjective for 2g >= 3k-1, and an isomorphism for 2g >= 3k+2";
const LEMMA_RANGE: &str = "Then E^2_{p,q}(F;i) = 0 for all p,q with p+q=k+1";

struct Emitter<'a> {
    out: &'a mut Vec<Obligation>,
    base: Params,
}

impl Emitter<'_> {
    fn push(&mut self, claim: &str, anchor: &str, params: Params, text: String, lhs: i64, rhs: i64) {
        self.out.push(Obligation {
            claim: claim.to_string(),
            anchor: anchor.to_string(),
            params,
            inequality: format!("{text}: {lhs} >= {rhs}"),
            lhs,
            rhs,
            holds: lhs >= rhs,
        });
    }

    fn at(&mut self, claim: &str, anchor: &str, text: &str, lhs: i64, rhs: i64) {
        let params = self.base.clone();
        self.push(claim, anchor, params, text.to_string(), lhs, rhs);
    }

    /// `Σ_{0,1}` in degree `q` from source genus `h`: an isomorphism in the range.
    fn s01(&mut self, claim: &str, h: i64, q: i64) {
        self.at(claim, S01_RANGE, &format!("2({h}) >= 3({q}) for s01 in degree {q}"), 2 * h, 3 * q);
    }

    fn s1m1_surj(&mut self, claim: &str, h: i64, q: i64) {
        self.at(
            claim,
            S1M1_RANGE,
            &format!("2({h}) >= 3({q})-1 for s1-1 onto in degree {q}"),
            2 * h,
            3 * q - 1,
        );
    }

    fn s1m1_iso(&mut self, claim: &str, h: i64, q: i64) {
        self.at(
            claim,
            S1M1_RANGE,
            &format!("2({h}) >= 3({q})+2 for s1-1 iso in degree {q}"),
            2 * h,
            3 * q + 2,
        );
    }

    /// Hypotheses of the vanishing lemma for `E²_{p,q}`, `p + q = lemma_k + 1`,
    /// `q <= lemma_k - j`, on the arc complex of `ambient` with side `side`.
    fn vanishing_lemma(&mut self, tag: &str, ambient: SurfaceType, side: Side, lemma_k: i64, j: i64, k: i64) {
        if lemma_k < j {
            return;
        }
        let big_g = i64::from(ambient.g);
        let i = i64::from(side.index());
        self.at(
            &format!("{tag}.lemma.range"),
            LEMMA_RANGE,
            &format!("k <= g-3+i with k={lemma_k}, g={big_g}, i={i}"),
            big_g - 3 + i,
            lemma_k,
        );
        for q in 0..=lemma_k - j {
            self.at(
                &format!("{tag}.lemma.induction"),
                LEMMA_RANGE,
                &format!("degree q={q} below k={k}"),
                k - 1,
                q,
            );
            for p in 1..=lemma_k + 2 - q {
                let surjective_only = p + q == lemma_k + 2;
                let s = min_realizable_genus(p as usize, side, ambient.g);
                let mut params = self.base.clone();
                params.p = Some(p);
                params.q = Some(q);
                params.s = Some(i64::from(s));
                let label = match cut_surface_for_genus(ambient, p as usize, side, s) {
                    Ok(label) => label,
                    Err(_) => {
                        self.push(
                            &format!("{tag}.lemma.label"),
                            LEMMA_RANGE,
                            params,
                            format!("cut surface exists for p={p}, s={s}"),
                            0,
                            1,
                        );
                        continue;
                    }
                };
                // Σ_{1,-1}^a ∘ Σ_{0,1}^b carries the label to the ambient surface.
                let a = big_g - i64::from(label.g);
                let b = i64::from(ambient.r) - i64::from(label.r) + a;
                let h = i64::from(label.g);
                let kind = if surjective_only { "onto" } else { "iso" };
                let claim = format!("{tag}.lemma.{kind}");
                let saved = std::mem::replace(&mut self.base, params);
                self.at(&claim, LEMMA_RANGE, &format!("s1-1 steps a={a} >= 0"), a, 0);
                self.at(&claim, LEMMA_RANGE, &format!("s01 steps b={b} >= 0"), b, 0);
                if b > 0 {
                    self.s01(&claim, h, q);
                }
                if a > 0 {
                    if surjective_only {
                        self.s1m1_surj(&claim, h, q);
                    } else {
                        self.s1m1_iso(&claim, h, q);
                    }
                }
                self.base = saved;
            }
        }
    }

    /// The displayed chain `2(g-p+1) >= mid >= 3q+2` at `p = top - q`.
    fn final_chain(&mut self, tag: &str, anchor: &str, g: i64, top: i64, q_max: i64, mid: impl Fn(i64) -> (i64, String)) {
        for q in 0..=q_max {
            let p = top - q;
            let (m, m_text) = mid(q);
            let saved = self.base.clone();
            self.base.p = Some(p);
            self.base.q = Some(q);
            self.at(
                &format!("{tag}.final"),
                anchor,
                &format!("2(g-p+1) >= {m_text} at g={g}, p={p}"),
                2 * (g - p + 1),
                m,
            );
            self.at(&format!("{tag}.final"), anchor, &format!("{m_text} >= 3q+2 at q={q}"), m, 3 * q + 2);
            self.base = saved;
        }
    }
}

fn base(branch: Branch, g: i64, r: i64, k: i64) -> Params {
    Params {
        branch: branch.name().to_string(),
        g,
        r,
        k,
        p: None,
        q: None,
        s: None,
    }
}

fn s01_branch(g: i64, k: i64, out: &mut Vec<Obligation>) {
    let r = 1;
    let mut e = Emitter {
        out,
        base: base(Branch::S01Iso, g, r, k),
    };
    let anchor = "noting that g >= 2, since k >= 1";
    e.at("s01.genus", anchor, "g >= 2", g, 2);
    e.s01("s01.c1", g - 1, k - 1);
    e.s1m1_surj("s01.c2", g - 2, k - 1);
    if g >= 2 {
        let ambient = SurfaceType::new(g as u32, (r + 1) as u32);
        e.vanishing_lemma("s01", ambient, Side::Two, k, 2, k);
    }
    e.final_chain(
        "s01",
        "2(g-p+1) = 2(g-k-1+q+1) >= 3k-2k+2q = 2q+k >= 3q+2",
        g,
        k + 1,
        k - 2,
        |q| (2 * q + k, format!("2q+k={}", 2 * q + k)),
    );
}

fn s1m1_surj_branch(g: i64, k: i64, out: &mut Vec<Obligation>) {
    let r = 2;
    let mut e = Emitter {
        out,
        base: base(Branch::S1m1Surj, g, r, k),
    };
    e.at("s1-1.surj.genus", S1M1_RANGE, "g-1 >= 0", g - 1, 0);
    e.s1m1_surj("s1-1.surj.c1", g - 1, k - 1);
    e.s01("s1-1.surj.c2", g - 1, k - 1);
    if k >= 2 {
        e.at("s1-1.surj.e3.genus", "Let g >= 3", "g+1 >= 3", g + 1, 3);
        e.s01("s1-1.surj.c3", g - 2, k - 2);
        for c in ["c4", "c5", "c6"] {
            e.s1m1_surj(&format!("s1-1.surj.{c}"), g - 2, k - 2);
        }
        e.s1m1_iso("s1-1.surj.c1-injective", g - 1, k - 2);
        e.s01("s1-1.surj.c2-injective", g - 1, k - 2);
    }
    if g >= 1 {
        let ambient = SurfaceType::new((g + 1) as u32, (r - 1) as u32);
        e.vanishing_lemma("s1-1.surj", ambient, Side::One, k, 3, k);
    }
    e.final_chain(
        "s1-1.surj",
        "2(g-p+1) = 2g-2(k+1-q)+2 >= 3k-1-2k+2q = k+2q-1 >= 3q+2",
        g,
        k + 1,
        k - 3,
        |q| (k + 2 * q - 1, format!("k+2q-1={}", k + 2 * q - 1)),
    );
}

fn s1m1_iso_branch(g: i64, k: i64, out: &mut Vec<Obligation>) {
    let r = 2;
    let mut e = Emitter {
        out,
        base: base(Branch::S1m1Iso, g, r, k),
    };
    e.s1m1_surj("s1-1.iso.c1", g - 1, k);
    e.s01("s1-1.iso.c2", g - 1, k);
    e.at("s1-1.iso.e3.genus", "Let g >= 3", "g+1 >= 3", g + 1, 3);
    e.s1m1_iso("s1-1.iso.c1-injective", g - 1, k - 1);
    e.s01("s1-1.iso.c2-injective", g - 1, k - 1);
    e.s01("s1-1.iso.c3", g - 2, k - 1);
    for c in ["c4", "c5", "c6"] {
        e.s1m1_surj(&format!("s1-1.iso.{c}"), g - 2, k - 1);
    }
    let ambient = SurfaceType::new((g + 1) as u32, (r - 1) as u32);
    e.vanishing_lemma("s1-1.iso", ambient, Side::One, k + 1, 3, k);
    e.final_chain(
        "s1-1.iso",
        "the final inequality is the same",
        g,
        k + 2,
        k - 2,
        |q| (k + 2 * q, format!("k+2q={}", k + 2 * q)),
    );
}

/// Every inequality the induction uses, for `1 <= k <= k_max` and
/// `0 <= g <= g_max` within each branch's hypothesis.
pub fn main_theorem_ledger(g_max: u32, k_max: u32) -> Vec<Obligation> {
    let cells: Vec<(Branch, i64, i64)> = [Branch::S01Iso, Branch::S1m1Surj, Branch::S1m1Iso]
        .into_iter()
        .flat_map(|b| {
            (1..=i64::from(k_max)).flat_map(move |k| (0..=i64::from(g_max)).map(move |g| (b, k, g)))
        })
        .filter(|&(b, k, g)| b.hypothesis(g, k))
        .collect();
    cells
        .into_par_iter()
        .map(|(b, k, g)| {
            let mut out = Vec::new();
            match b {
                Branch::S01Iso => s01_branch(g, k, &mut out),
                Branch::S1m1Surj => s1m1_surj_branch(g, k, &mut out),
                Branch::S1m1Iso => s1m1_iso_branch(g, k, &mut out),
            }
            out
        })
        .flatten_iter()
        .collect()
}
