use arcstab::e1::{d1_matrix, e1_skeleton};
use arcstab::ledger::{main_theorem_ledger, si_p_exceptions, twisted_consistency, ExceptionCase, ExceptionGrid};
use arcstab::ribbon::oracle_boundary_count;
use arcstab::surface::{ArcClass, Side, SurfaceType};
use arcstab::zchain::complex::exact_range_top;
use arcstab::zchain::homotopy::tau;
use arcstab::zchain::{
    quotient_complex, verify_homotopy, verify_homotopy_sampled, verify_quotient_homotopy, HomotopyReport, MAX_DEGREE_CAP,
};
use arcstab::{Error, Perm};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::report::Report;

fn sides(side: Option<Side>) -> Vec<Side> {
    side.map_or(Side::BOTH.to_vec(), |s| vec![s])
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

pub fn invariants(perm: &Perm, side: Side, ambient: Option<SurfaceType>) -> Result<Report, Error> {
    let mut report = Report::new(
        "invariants",
        &["perm", "side", "degree", "boundary_count", "oracle_boundary_count", "S", "ambient", "realizable", "stabilizer"],
    );
    let arc = ArcClass::new(perm.clone(), side);
    let formula = arc.boundary_of_neighborhood();
    let oracle = oracle_boundary_count(&arc);
    let (realizable, stabilizer) = match ambient {
        None => (Value::Null, Value::Null),
        Some(f) => match arc.stabilizer_label(f) {
            Ok(s) => (true.into(), to_json(&s)),
            Err(Error::GenusDeficit { .. }) => (false.into(), Value::Null),
            Err(e) => return Err(e),
        },
    };
    report.push(vec![
        perm.to_string().into(),
        side.index().into(),
        perm.degree().into(),
        formula.into(),
        oracle.into(),
        arc.simplex_genus().into(),
        ambient.map_or(Value::Null, |f| to_json(&f)),
        realizable,
        stabilizer,
    ]);
    if formula != oracle {
        report.failures.push(json!({"perm": perm.to_string(), "side": side.index(), "formula": formula, "oracle": oracle}));
    }
    Ok(report)
}

pub fn oracle_diff(max_degree: usize) -> Report {
    let mut report = Report::new("oracle-diff", &["degree", "side", "classes", "mismatches"]);
    for p in 1..=max_degree {
        for side in Side::BOTH {
            let perms: Vec<Perm> = Perm::all(p).collect();
            let bad: Vec<Value> = perms
                .into_par_iter()
                .filter_map(|sigma| {
                    let arc = ArcClass::new(sigma, side);
                    let (f, o) = (arc.boundary_of_neighborhood(), oracle_boundary_count(&arc));
                    (f != o).then(|| json!({"perm": arc.perm.to_string(), "side": side.index(), "formula": f, "oracle": o}))
                })
                .collect();
            report.push(vec![p.into(), side.index().into(), factorial(p).into(), bad.len().into()]);
            report.failures.extend(bad);
        }
    }
    report
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

pub fn homology(genera: &[u32], side: Option<Side>, max_degree: usize) -> Result<Report, Error> {
    let mut report = Report::new(
        "homology",
        &["g", "side", "degree", "dim", "betti", "torsion", "exact_expected", "trivial"],
    );
    for &g in genera {
        for side in sides(side) {
            let top = exact_range_top(g, side);
            let c = quotient_complex(g, side, max_degree)?;
            for h in c.homology_all() {
                let expected = (2..=top).contains(&h.degree);
                let trivial = h.is_trivial();
                let torsion: Vec<String> = h.torsion.iter().map(|t| t.to_string()).collect();
                report.push(vec![
                    g.into(),
                    side.index().into(),
                    h.degree.into(),
                    c.dim(h.degree)?.into(),
                    h.betti.into(),
                    torsion.join(" ").into(),
                    expected.into(),
                    trivial.into(),
                ]);
                if expected && !trivial {
                    report.failures.push(json!({"g": g, "side": side.index(), "homology": to_json(&h)}));
                }
            }
        }
    }
    Ok(report)
}

pub struct HomotopyArgs<'a> {
    pub max_degree: usize,
    pub samples: usize,
    pub seed: u64,
    pub genera: &'a [u32],
    pub side: Option<Side>,
}

pub fn homotopy(args: HomotopyArgs<'_>) -> Result<Report, Error> {
    let mut report = Report::new("homotopy", &["check", "g", "side", "degrees", "checked", "failures"]);
    let record = |report: &mut Report, check: &str, g: Value, side: Value, r: &HomotopyReport| {
        report.push(vec![
            check.into(),
            g.clone(),
            side.clone(),
            format!("{}..{}", r.degrees.0, r.degrees.1).into(),
            r.checked.into(),
            r.failures.len().into(),
        ]);
        for f in &r.failures {
            report.failures.push(json!({"check": check, "g": g, "side": side, "perm": f.to_string()}));
        }
    };
    let full = verify_homotopy(args.max_degree);
    record(&mut report, "exhaustive", Value::Null, Value::Null, &full);
    if args.samples > 0 {
        for k in args.max_degree + 1..=MAX_DEGREE_CAP {
            let r = verify_homotopy_sampled(k, args.samples, args.seed.wrapping_add(k as u64));
            record(&mut report, "sampled", Value::Null, Value::Null, &r);
        }
    }
    for &g in args.genera {
        for side in sides(args.side) {
            let r = verify_quotient_homotopy(g, side)?;
            record(&mut report, "quotient", g.into(), side.index().into(), &r);
        }
        if g % 2 == 0 {
            let m = g as usize + 1;
            let ok = tau(m).boundary()? == Perm::identity(m).boundary()?;
            let r = HomotopyReport {
                degrees: (m, m),
                checked: 1,
                failures: if ok { vec![] } else { vec![tau(m)] },
            };
            record(&mut report, "even-genus", g.into(), Value::Null, &r);
        }
    }
    Ok(report)
}

pub fn e1(ambient: SurfaceType, side: Side, max_degree: usize, d1: Option<usize>) -> Result<Report, Error> {
    let page = e1_skeleton(ambient, side, max_degree)?;
    let mut report = match d1 {
        None => {
            let mut report = Report::new("e1", &["p", "perm", "S", "stabilizer"]);
            for row in &page.rows {
                for s in &row.summands {
                    report.push(vec![row.p.into(), s.perm.to_string().into(), s.genus.into(), to_json(&s.stabilizer)]);
                }
            }
            report
        }
        Some(p) => {
            let mut report = Report::new("e1-d1", &["row", "col", "target", "source", "coefficient"]);
            let m = d1_matrix(&page, p)?;
            let src = page.perms(p).ok_or(Error::MissingDegree(p))?;
            let dst = page.perms(p - 1).ok_or(Error::MissingDegree(p - 1))?;
            for (r, c, v) in m.iter() {
                report.push(vec![
                    r.into(),
                    c.into(),
                    dst[r].to_string().into(),
                    src[c].to_string().into(),
                    i64::try_from(v).map_or_else(|_| v.to_string().into(), Value::from),
                ]);
            }
            report.meta("shape", json!([m.rows(), m.cols()]));
            report
        }
    };
    report.meta("ambient", to_json(&page.ambient));
    report.meta("side", side.index());
    report.meta("vanishing_bound", page.vanishing_bound);
    let top = page.rows.iter().map(|r| r.p).max().unwrap_or(0);
    for p in 3..=top {
        let composite = d1_matrix(&page, p - 1)?.mul(&d1_matrix(&page, p)?)?;
        if !composite.is_zero() {
            report.failures.push(json!({"check": "d1 d1 = 0", "p": p, "nonzero_entries": composite.nnz()}));
        }
    }
    Ok(report)
}

pub fn ledger(g_max: u32, k_max: u32, all: bool) -> Report {
    let obligations = main_theorem_ledger(g_max, k_max);
    let mut report = if all {
        let mut report = Report::new(
            "ledger",
            &["claim", "anchor", "branch", "g", "r", "k", "p", "q", "s", "inequality", "lhs", "rhs", "holds"],
        );
        for o in &obligations {
            report.push(vec![
                o.claim.clone().into(),
                o.anchor.clone().into(),
                o.params.branch.clone().into(),
                o.params.g.into(),
                o.params.r.into(),
                o.params.k.into(),
                o.params.p.into(),
                o.params.q.into(),
                o.params.s.into(),
                o.inequality.clone().into(),
                o.lhs.into(),
                o.rhs.into(),
                o.holds.into(),
            ]);
        }
        report
    } else {
        let mut report = Report::new("ledger", &["claim", "anchor", "instances", "violated"]);
        let mut summary: Vec<(&str, &str, usize, usize)> = Vec::new();
        for o in &obligations {
            match summary.iter_mut().find(|(c, _, _, _)| *c == o.claim) {
                Some(entry) => {
                    entry.2 += 1;
                    entry.3 += usize::from(!o.holds);
                }
                None => summary.push((&o.claim, &o.anchor, 1, usize::from(!o.holds))),
            }
        }
        for (claim, anchor, n, bad) in summary {
            report.push(vec![claim.into(), anchor.into(), n.into(), bad.into()]);
        }
        report
    };
    report.failures.extend(obligations.iter().filter(|o| !o.holds).map(to_json));
    let twisted = twisted_consistency(i64::from(g_max), i64::from(k_max));
    report.meta("twisted_checked", twisted.checked);
    report.meta("obligations", obligations.len());
    for v in twisted.violations {
        report.failures.push(json!({"check": "twisted monotonicity", "detail": v}));
    }
    report
}

pub fn exceptions(case: Option<ExceptionCase>, grid: ExceptionGrid) -> Report {
    let mut report = Report::new("exceptions", &["case", "pair", "n", "g", "k"]);
    let cases = case.map_or(ExceptionCase::ALL.to_vec(), |c| vec![c]);
    for c in cases {
        let found = si_p_exceptions(c, grid);
        let expected: Vec<_> = c
            .expected()
            .into_iter()
            .filter(|t| t.n <= grid.n_max && t.g <= grid.g_max && t.k <= grid.k_max)
            .collect();
        for t in &found {
            report.push(vec![c.name().into(), t.pair.to_string().into(), t.n.into(), t.g.into(), t.k.into()]);
            if !expected.contains(t) {
                report.failures.push(json!({"unexpected": to_json(t)}));
            }
        }
        for t in expected.iter().filter(|t| !found.contains(t)) {
            report.failures.push(json!({"missing": to_json(t)}));
        }
    }
    report
}
