use arcstab::e1::{cancellation_report, d1_matrix, e1_skeleton};
use arcstab::surface::{realizable_perms, ArcClass, Side, SurfaceType};
use arcstab::zchain::complex::exact_range_top;
use arcstab::zchain::{perm_complex, quotient_complex, snf, verify_quotient_homotopy};
use arcstab::Perm;

#[test]
fn quotient_complexes_are_complexes() {
    for g in 2..=5 {
        for side in Side::BOTH {
            assert!(quotient_complex(g, side, 7).unwrap().is_complex(), "g={g} side={side}");
        }
    }
    assert!(perm_complex(7).is_complex());
}

#[test]
fn quotient_exact_in_range() {
    for g in 2..=5 {
        for side in Side::BOTH {
            let top = exact_range_top(g, side);
            let c = quotient_complex(g, side, top + 1).unwrap();
            for h in c.homology_all() {
                if (2..=top).contains(&h.degree) {
                    assert!(h.is_trivial(), "g={g} side={side} {h:?}");
                }
            }
        }
    }
}

#[test]
fn rank_bound() {
    let c = quotient_complex(3, Side::Two, 6).unwrap();
    for p in 1..6 {
        let a = snf(c.boundary(p).unwrap(), false).rank;
        let b = snf(c.boundary(p + 1).unwrap(), false).rank;
        assert!(a + b <= c.dim(p).unwrap());
    }
}

#[test]
fn quotient_homotopy() {
    for g in 2..=5 {
        for side in Side::BOTH {
            let r = verify_quotient_homotopy(g, side).unwrap();
            assert!(r.passed(), "g={g} side={side}: {:?}", r.failures);
        }
    }
}

#[test]
fn d1_matches_quotient_boundary() {
    for g in 2..=5u32 {
        for side in Side::BOTH {
            let ambient = SurfaceType::new(g, 2);
            let page = e1_skeleton(ambient, side, 6).unwrap();
            let c = quotient_complex(g, side, 6).unwrap();
            for p in 2..=page.rows.len() {
                let d1 = d1_matrix(&page, p).unwrap();
                assert_eq!(&d1, c.boundary(p).unwrap(), "g={g} side={side} p={p}");
                if p < page.rows.len() {
                    assert!(d1.mul(&d1_matrix(&page, p + 1).unwrap()).unwrap().is_zero());
                }
            }
        }
    }
}

#[test]
fn page_invariants() {
    for g in 2..=5u32 {
        for side in Side::BOTH {
            let ambient = SurfaceType::new(g, 3);
            let page = e1_skeleton(ambient, side, 6).unwrap();
            assert_eq!(page.vanishing_bound, 2 * g - 2 + side.index());
            for row in &page.rows {
                assert_eq!(row.summands.len(), realizable_perms(row.p, side, g).len());
                for s in &row.summands {
                    assert!(ArcClass::new(s.perm.clone(), side).realizable(g));
                    assert_eq!(s.stabilizer.euler_char(), ambient.euler_char() + row.p as i64);
                }
            }
        }
    }
}

#[test]
fn cancellation_matches_columns() {
    for p in 2..=6 {
        let target: Vec<Perm> = Perm::all(p - 1).collect();
        let source: Vec<Perm> = Perm::all(p).collect();
        let m = arcstab::zchain::boundary_matrix(&source, &target);
        for (c, sigma) in source.iter().enumerate() {
            let report = cancellation_report(sigma);
            let mut from_report: Vec<(usize, i64)> = report
                .iter()
                .map(|f| (target.iter().position(|t| t == &f.target).unwrap(), f.sign))
                .collect();
            from_report.sort();
            let column: Vec<(usize, i64)> = m
                .column(c)
                .into_iter()
                .map(|(r, v)| (r, i64::try_from(&v).unwrap()))
                .collect();
            assert_eq!(from_report, column, "{sigma}");
            for f in &report {
                assert_eq!(sigma.face(f.face).unwrap(), f.target);
            }
        }
    }
}
