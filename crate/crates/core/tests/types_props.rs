use twuality::oracle::{enumerate_proper_set_systems, sample_vf_safe, vf_safe_delta_matroids};
use twuality::types::{classify, primal_type, verify_table1};
use twuality::{SetSystem, SubsetMask, TypeLetter};

use TypeLetter::{P, T, U};

/// Primal type straight from the ribbon-loop definitions: `e` is a ribbon
/// loop if no minimum feasible set contains it, and a non-orientable one if
/// it is still a ribbon loop after twisting at `e`.
fn primal_by_definition(d: &SetSystem, e: usize) -> TypeLetter {
    let ribbon_loop = |d: &SetSystem| {
        let r_min = d.width_stats().unwrap().r_min;
        d.stratum(r_min).iter().all(|f| !f.contains(e))
    };
    if !ribbon_loop(d) {
        P
    } else if ribbon_loop(&d.twist(SubsetMask::singleton(e))) {
        T
    } else {
        U
    }
}

#[test]
fn observed_types_match_definitions_on_delta_matroids() {
    for n in 1..=4 {
        for d in vf_safe_delta_matroids(n).unwrap() {
            for e in 0..n {
                assert_eq!(primal_type(&d, e).unwrap(), primal_by_definition(&d, e), "{d} at {e}");
            }
        }
    }
}

#[test]
fn observed_types_match_definitions_on_set_systems() {
    // The equivalence needs no exchange axiom: a set containing `e` one size
    // above the minimum is exactly what keeps `e` a loop after the twist.
    for n in 1..=3 {
        for d in enumerate_proper_set_systems(n).unwrap() {
            for e in 0..n {
                assert_eq!(primal_type(&d, e).unwrap(), primal_by_definition(&d, e), "{d} at {e}");
            }
        }
    }
}

#[test]
fn dual_type_is_primal_type_of_the_dual() {
    for n in 1..=3 {
        for d in enumerate_proper_set_systems(n).unwrap() {
            for e in 0..n {
                assert_eq!(classify(&d, e).unwrap().dual, primal_type(&d.dual(), e).unwrap());
            }
        }
    }
}

#[test]
fn single_element_transitions() {
    for n in 1..=3 {
        for d in vf_safe_delta_matroids(n).unwrap() {
            let stats = d.width_stats().unwrap();
            for e in 0..n {
                let single = SubsetMask::singleton(e);
                let (tw, lc) = (d.twist(single), d.loop_complement(single));
                let (tw_stats, lc_stats) = (tw.width_stats().unwrap(), lc.width_stats().unwrap());
                let t = classify(&d, e).unwrap();
                let (t_tw, t_lc) = (classify(&tw, e).unwrap(), classify(&lc, e).unwrap());

                let (primal_tw, primal_lc, min_shift) = match t.primal {
                    P => (U, P, -1),
                    U => (P, T, 1),
                    T => (T, U, 0),
                };
                assert_eq!((t_tw.primal, t_lc.primal), (primal_tw, primal_lc), "{d} at {e}");
                assert_eq!(tw_stats.r_min as i64 - stats.r_min as i64, min_shift);
                assert_eq!(lc_stats.r_min, stats.r_min);

                let (dual_tw, dual_lc, max_tw, max_lc) = match t.dual {
                    P => (U, T, 1, 1),
                    U => (P, U, -1, 0),
                    T => (T, P, 0, -1),
                };
                assert_eq!((t_tw.dual, t_lc.dual), (dual_tw, dual_lc), "{d} at {e}");
                assert_eq!(tw_stats.r_max as i64 - stats.r_max as i64, max_tw);
                assert_eq!(lc_stats.r_max as i64 - stats.r_max as i64, max_lc);
            }
        }
    }
}

#[test]
fn table1_holds_exhaustively() {
    for n in 1..=3 {
        for d in vf_safe_delta_matroids(n).unwrap() {
            for e in 0..n {
                let report = verify_table1(&d, e).unwrap();
                assert!(report.is_clean(), "{d} at {e}: {:?}", report.violations);
            }
        }
    }
}

#[test]
fn table1_holds_on_samples() {
    for (n, seed) in [(4, 11), (5, 12)] {
        for d in sample_vf_safe(n, 200, seed) {
            for e in 0..n {
                assert!(verify_table1(&d, e).unwrap().is_clean(), "{d} at {e}");
            }
        }
    }
}

#[test]
fn every_type_occurs() {
    let mut seen = std::collections::BTreeSet::new();
    for d in vf_safe_delta_matroids(3).unwrap() {
        for e in 0..3 {
            seen.insert(classify(&d, e).unwrap().to_string());
        }
    }
    assert_eq!(seen.len(), 9);
}
