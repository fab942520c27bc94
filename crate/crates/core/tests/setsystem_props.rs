use proptest::prelude::*;
use twuality::mask::all_subsets;
use twuality::oracle::{delta_matroids, enumerate_proper_set_systems, vf_safe_by_closure, vf_safe_delta_matroids};
use twuality::{Letter, SetSystem, SubsetMask, TwualWord, Twuality};

fn proper_up_to(n: usize) -> Vec<SetSystem> {
    (1..=n).flat_map(|k| enumerate_proper_set_systems(k).unwrap()).collect()
}

fn word(s: &str) -> TwualWord {
    s.parse().unwrap()
}

fn min_stratum(d: &SetSystem) -> Vec<SubsetMask> {
    d.stratum(d.width_stats().unwrap().r_min).to_vec()
}

fn max_stratum(d: &SetSystem) -> Vec<SubsetMask> {
    d.stratum(d.width_stats().unwrap().r_max).to_vec()
}

#[test]
fn twist_and_loop_complement_are_involutions() {
    for d in proper_up_to(3) {
        for a in all_subsets(d.n()) {
            assert_eq!(d.twist(a).twist(a), d);
            assert_eq!(d.loop_complement(a).loop_complement(a), d);
        }
    }
}

#[test]
fn operations_at_distinct_elements_commute() {
    let letters = [Letter::Twist, Letter::LoopComplement];
    for d in proper_up_to(3) {
        for e in 0..d.n() {
            for f in (0..d.n()).filter(|&f| f != e) {
                let (se, sf) = (SubsetMask::singleton(e), SubsetMask::singleton(f));
                for l1 in letters {
                    for l2 in letters {
                        let (w1, w2) = (TwualWord::new(vec![l1]), TwualWord::new(vec![l2]));
                        assert_eq!(
                            d.apply_word(&w1, se).apply_word(&w2, sf),
                            d.apply_word(&w2, sf).apply_word(&w1, se)
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn group_relations_hold_on_every_system() {
    let words = [
        "", "*", "x", "*x", "x*", "*x*", "x*x", "*x*x", "xx*", "*x*x*x", "x*x*x*x",
    ];
    for d in proper_up_to(3) {
        for e in 0..d.n() {
            let single = SubsetMask::singleton(e);
            assert_eq!(d.apply_word(&word("*x").repeat(3), single), d);
            for w in words {
                let w = word(w);
                assert_eq!(d.apply_word(&w, single), d.apply_word(&w.normalize(), single));
            }
        }
    }
}

#[test]
fn loop_complement_is_order_independent() {
    for d in proper_up_to(3) {
        let all = SubsetMask::full(d.n());
        let descending = (0..d.n())
            .rev()
            .fold(d.clone(), |acc, e| acc.loop_complement(SubsetMask::singleton(e)));
        assert_eq!(descending, d.loop_complement(all));
    }
}

#[test]
fn minimum_stratum_survives_loop_complementation() {
    for d in proper_up_to(3) {
        for a in all_subsets(d.n()) {
            assert_eq!(min_stratum(&d.loop_complement(a)), min_stratum(&d));
            for w in ["*x*", "x*x"] {
                assert_eq!(max_stratum(&d.apply_word(&word(w), a)), max_stratum(&d), "{d} {w}");
            }
        }
    }
}

#[test]
fn twists_of_delta_matroids_are_delta_matroids() {
    for n in 1..=4 {
        for d in delta_matroids(n).unwrap() {
            for a in all_subsets(n) {
                assert!(d.twist(a).is_delta_matroid(), "{d} twisted by {a:?}");
            }
        }
    }
}

#[test]
fn feasible_sizes_never_jump_by_more_than_two() {
    for n in 1..=4 {
        for d in delta_matroids(n).unwrap() {
            let mut sizes: Vec<usize> = d.family().iter().map(|f| f.len()).collect();
            sizes.dedup();
            assert!(sizes.windows(2).all(|w| w[1] - w[0] <= 2), "{d}");
        }
    }
}

#[test]
fn twisting_by_a_minimum_set_gives_a_normal_system() {
    for n in 1..=4 {
        for d in delta_matroids(n).unwrap() {
            for &a in &min_stratum(&d) {
                for t in [
                    Twuality::Twist,
                    Twuality::TwistLoop,
                    Twuality::LoopTwist,
                    Twuality::TwistLoopTwist,
                ] {
                    assert!(d.apply_twuality(t, a).is_normal(), "{d} {t} {a:?}");
                }
            }
            for &b in &min_stratum(&d.dual()) {
                assert!(d.loop_complement(b).is_dual_normal(), "{d} {b:?}");
            }
        }
    }
}

#[test]
fn equal_minimum_sizes_give_equal_minimum_strata() {
    for n in 1..=4 {
        for d in delta_matroids(n).unwrap() {
            for e in 0..n {
                let t = d.twist(SubsetMask::singleton(e));
                if d.width_stats().unwrap().r_min == t.width_stats().unwrap().r_min {
                    assert_eq!(min_stratum(&d), min_stratum(&t), "{d} at {e}");
                }
            }
        }
    }
}

#[test]
fn minimum_strata_can_differ_for_set_systems() {
    let d = SetSystem::from_named(&["1", "2", "3"], &[&["1"], &["2", "3"]]).unwrap();
    assert!(!d.is_delta_matroid());
    let t = d.twist(SubsetMask::singleton(1));
    assert_eq!(d.width_stats().unwrap().r_min, t.width_stats().unwrap().r_min);
    assert_eq!(min_stratum(&d), vec![SubsetMask::from_bits(0b001)]);
    assert_eq!(min_stratum(&t), vec![SubsetMask::from_bits(0b100)]);
}

#[test]
fn non_orientable_loops_extend_minimum_sets() {
    // `e` is a non-orientable ribbon loop when it is a ribbon loop of
    // `D^{*|e}`, i.e. `{e}` is feasible in `D^{*|e}` twisted to normal form.
    for n in 1..=4 {
        for d in vf_safe_delta_matroids(n).unwrap() {
            let mins = min_stratum(&d);
            let next = d.stratum(d.width_stats().unwrap().r_min + 1);
            for e in 0..n {
                let single = SubsetMask::singleton(e);
                if mins.iter().all(|a| !a.contains(e)) && next.iter().any(|b| b.contains(e)) {
                    for a in &mins {
                        assert!(d.contains(*a | single), "{d} {e}");
                    }
                }
            }
        }
    }
}

#[test]
fn every_feasible_set_sits_between_extreme_sets() {
    for n in 1..=4 {
        for d in delta_matroids(n).unwrap() {
            let (lo, hi) = (min_stratum(&d), max_stratum(&d));
            for &x in d.family() {
                assert!(lo.iter().any(|a| a.is_subset_of(x)), "{d}");
                assert!(hi.iter().any(|b| x.is_subset_of(*b)), "{d}");
            }
        }
    }
}

#[test]
fn vf_safety_agrees_across_methods() {
    for n in 1..=3 {
        for d in delta_matroids(n).unwrap() {
            let fast = d.is_vf_safe();
            assert_eq!(fast, d.is_vf_safe_exhaustive(), "{d}");
            if n <= 2 {
                assert_eq!(fast, vf_safe_by_closure(&d), "{d}");
            }
        }
    }
}

#[test]
fn delta_matroid_counts_are_pinned() {
    let dm: Vec<usize> = (1..=4).map(|n| delta_matroids(n).unwrap().len()).collect();
    assert_eq!(dm, [3, 15, 155, 5959]);
    let vf: Vec<usize> = (1..=4).map(|n| vf_safe_delta_matroids(n).unwrap().len()).collect();
    assert_eq!(vf, [3, 15, 147, 3759]);
}

fn arb_system() -> impl Strategy<Value = SetSystem> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(0u64..1 << n, 1..12).prop_map(move |bits| SetSystem::from_bits(n, &bits).unwrap())
    })
}

proptest! {
    #[test]
    fn random_systems_respect_involutions(d in arb_system(), a in any::<u64>()) {
        let a = SubsetMask::from_bits(a & SubsetMask::full(d.n()).bits());
        prop_assert_eq!(d.twist(a).twist(a), d.clone());
        prop_assert_eq!(d.loop_complement(a).loop_complement(a), d.clone());
        let lc = d.loop_complement(a);
        prop_assert_eq!(min_stratum(&lc), min_stratum(&d));
    }

    #[test]
    fn random_systems_respect_group_action(d in arb_system(), e in 0usize..6) {
        let e = e % d.n();
        let single = SubsetMask::singleton(e);
        for s in Twuality::ALL {
            for t in Twuality::ALL {
                prop_assert_eq!(
                    d.apply_twuality(s, single).apply_twuality(t, single),
                    d.apply_twuality(s.then(t), single)
                );
            }
        }
    }
}
