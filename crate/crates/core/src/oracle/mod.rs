//! Exhaustive generators and brute-force oracles for small instances.
//!
//! Everything here is deliberately naive: the oracles recompute from first
//! principles what the library computes by other routes, and the
//! generators list every instance of a given size.

mod enumerate;
mod search;

use std::collections::{HashSet, VecDeque};

pub use enumerate::{
    delta_matroids, double_occurrence_words, enumerate_delta_matroids, enumerate_proper_set_systems,
    enumerate_signed_chord_diagrams, random_symmetric_matrix, sample_signed_chord_diagrams, sample_vf_safe,
    vf_safe_delta_matroids, MAX_EXHAUSTIVE_CHORDS, MAX_EXHAUSTIVE_GROUND_SIZE,
};
pub use search::{counterexample_search, Property, Witness, WitnessInstance};

use crate::mask::SubsetMask;
use crate::setsystem::SetSystem;

/// Size limits and sampling parameters for sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Exhaustive sweeps cover ground sets of size `1..=max_ground_size`.
    pub max_ground_size: usize,
    /// Exhaustive bouquet sweeps cover `1..=max_chords` chords.
    pub max_chords: usize,
    /// Seeded samples drawn one size beyond the exhaustive range.
    pub sample_count: usize,
    pub seed: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_ground_size: 3,
            max_chords: 3,
            sample_count: 0,
            seed: 0,
        }
    }
}

impl EnumerationBudget {
    /// Default for delta-matroid sweeps, which reach one element further
    /// than vf-safe sweeps.
    pub fn delta_matroid_sweep() -> Self {
        EnumerationBudget {
            max_ground_size: 4,
            ..Default::default()
        }
    }

    /// Default for sampled bouquet checks at four chords.
    pub fn sampled_bouquets(sample_count: usize, seed: u64) -> Self {
        EnumerationBudget {
            sample_count,
            seed,
            ..Default::default()
        }
    }
}

/// `Y ∈ F(D^{x|X})` iff an odd number of feasible `Z` satisfy
/// `Y − X ⊆ Z ⊆ Y`.
pub fn loop_complement_oracle(d: &SetSystem, x: SubsetMask, y: SubsetMask) -> bool {
    let floor = y - x;
    d.family()
        .iter()
        .filter(|&&z| floor.is_subset_of(z) && z.is_subset_of(y))
        .count()
        % 2
        == 1
}

/// The whole family of `D^{x|X}` rebuilt from [`loop_complement_oracle`].
pub fn loop_complement_by_parity(d: &SetSystem, x: SubsetMask) -> SetSystem {
    let family = crate::mask::all_subsets(d.n()).filter(|&y| loop_complement_oracle(d, x, y));
    SetSystem::with_ground(d.shared_ground(), family).expect("subsets of the ground set")
}

/// vf-safety by brute-force closure: apply single-element twists and loop
/// complementations until no new set system appears, and require every
/// member of the orbit to be a delta-matroid.
pub fn vf_safe_by_closure(d: &SetSystem) -> bool {
    let mut seen: HashSet<SetSystem> = HashSet::new();
    let mut queue = VecDeque::from([d.clone()]);
    seen.insert(d.clone());
    while let Some(current) = queue.pop_front() {
        if !current.is_delta_matroid() {
            return false;
        }
        for e in 0..d.n() {
            let single = SubsetMask::singleton(e);
            for next in [current.twist(single), current.loop_complement(single)] {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    true
}
