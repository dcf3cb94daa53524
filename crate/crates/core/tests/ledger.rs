use arcstab::ledger::{
    epsilon, main_theorem_ledger, si_p_exceptions, twisted_consistency, twisted_range, ExceptionCase, ExceptionGrid,
    GluingPair, TwistedMode,
};

#[test]
fn main_theorem_obligations_hold() {
    let ledger = main_theorem_ledger(50, 20);
    let failed: Vec<_> = ledger.iter().filter(|o| !o.holds).collect();
    assert!(failed.is_empty(), "{:#?}", &failed[..failed.len().min(5)]);
    assert!(ledger.iter().all(|o| o.recheck() == o.holds));
    for branch in ["s01-iso", "s1-1-surj", "s1-1-iso"] {
        assert!(ledger.iter().any(|o| o.params.branch == branch));
    }
    assert!(ledger.iter().any(|o| o.claim.ends_with("lemma.onto")));
    assert!(ledger.iter().any(|o| o.claim.ends_with("lemma.iso")));
}

#[test]
fn final_chain_for_s01() {
    // 2(g-p+1) >= 2q+k >= 3q+2 at p = k+1-q for every q <= k-2
    let ledger = main_theorem_ledger(30, 10);
    let finals: Vec<_> = ledger.iter().filter(|o| o.claim == "s01.final").collect();
    assert!(!finals.is_empty());
    for k in 2..=10i64 {
        for g in 0..=30i64 {
            if 2 * g < 3 * k {
                continue;
            }
            for q in 0..=k - 2 {
                assert!(finals.iter().any(|o| o.params.g == g && o.params.k == k && o.params.q == Some(q)));
            }
        }
    }
}

#[test]
fn ledger_is_deterministic() {
    assert_eq!(main_theorem_ledger(20, 8), main_theorem_ledger(20, 8));
}

#[test]
fn twisted_modes_are_consistent() {
    let r = twisted_consistency(50, 20);
    assert!(r.violations.is_empty(), "{:?}", r.violations);
    assert!(r.checked > 0);
}

#[test]
fn twisted_examples() {
    assert!(twisted_range(TwistedMode::AbsIsoS01, 2, 0, 3, GluingPair::S10));
    assert!(twisted_range(TwistedMode::RelSurjS1m1, 1, 0, 0, GluingPair::S1M1));
    assert!(!twisted_range(TwistedMode::AbsIso, 1, 0, 2, GluingPair::S1M1));
    assert_eq!(epsilon(1, -1).unwrap(), 1);
    assert_eq!(epsilon(1, 0).unwrap(), 0);
    assert_eq!(epsilon(0, 1).unwrap(), 0);
}

#[test]
fn exception_lists_match() {
    for case in ExceptionCase::ALL {
        assert_eq!(si_p_exceptions(case, ExceptionGrid::default()), case.expected(), "{case}");
    }
}

#[test]
fn exception_lists_are_stable_under_a_larger_grid() {
    let big = ExceptionGrid {
        n_max: 5,
        g_max: 20,
        k_max: 20,
    };
    for case in ExceptionCase::ALL {
        assert_eq!(si_p_exceptions(case, big), case.expected());
    }
}
