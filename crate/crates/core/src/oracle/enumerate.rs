use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64;
use rayon::prelude::*;

use crate::binary::{from_matrix, Gf2SymMatrix};
use crate::bouquet::SignedChordDiagram;
use crate::error::{Error, Result};
use crate::mask::{GroundSet, SubsetMask};
use crate::setsystem::SetSystem;
use crate::word::Twuality;

/// 2^(2^4) − 1 = 65535 families is the largest exhaustive sweep.
pub const MAX_EXHAUSTIVE_GROUND_SIZE: usize = 4;
/// (2·3 − 1)!! · 2^3 = 120 diagrams.
pub const MAX_EXHAUSTIVE_CHORDS: usize = 3;

/// Every nonempty family over `{1..n}`, once each, in canonical
/// [`SetSystem`] order.
pub fn enumerate_proper_set_systems(n: usize) -> Result<impl Iterator<Item = SetSystem>> {
    if n > MAX_EXHAUSTIVE_GROUND_SIZE {
        return Err(Error::TooLargeToEnumerate {
            what: "ground set",
            n,
            max: MAX_EXHAUSTIVE_GROUND_SIZE,
        });
    }
    let ground = Arc::new(GroundSet::numbered(n)?);
    let subsets = 1u64 << n;
    let mut systems: Vec<SetSystem> = (1..1u64 << subsets)
        .map(|code| {
            let family = (0..subsets).filter(|s| code >> s & 1 == 1).map(SubsetMask::from_bits);
            SetSystem::with_ground(Arc::clone(&ground), family).expect("subsets of the ground set")
        })
        .collect();
    systems.sort();
    Ok(systems.into_iter())
}

/// The proper systems passing the symmetric exchange axiom, in canonical order.
pub fn enumerate_delta_matroids(n: usize) -> Result<impl Iterator<Item = SetSystem>> {
    Ok(delta_matroids(n)?.into_iter())
}

pub fn delta_matroids(n: usize) -> Result<Vec<SetSystem>> {
    let all: Vec<SetSystem> = enumerate_proper_set_systems(n)?.collect();
    Ok(all.into_par_iter().filter(SetSystem::is_delta_matroid).collect())
}

pub fn vf_safe_delta_matroids(n: usize) -> Result<Vec<SetSystem>> {
    Ok(delta_matroids(n)?
        .into_par_iter()
        .filter(SetSystem::is_vf_safe)
        .collect())
}

/// Double-occurrence words on `m` labels with labels numbered in order of
/// first appearance (one per perfect matching of the `2m` positions):
/// `aabb`, `abab`, `abba` for `m = 2`.
pub fn double_occurrence_words(m: usize) -> Vec<Vec<usize>> {
    fn fill(word: &mut Vec<Option<usize>>, next_label: usize, out: &mut Vec<Vec<usize>>) {
        let Some(first) = word.iter().position(Option::is_none) else {
            out.push(word.iter().map(|c| c.expect("filled")).collect());
            return;
        };
        word[first] = Some(next_label);
        for partner in first + 1..word.len() {
            if word[partner].is_none() {
                word[partner] = Some(next_label);
                fill(word, next_label + 1, out);
                word[partner] = None;
            }
        }
        word[first] = None;
    }
    let mut out = Vec::new();
    fill(&mut vec![None; 2 * m], 0, &mut out);
    out
}

/// Every double-occurrence word with every sign pattern, words outermost.
pub fn enumerate_signed_chord_diagrams(m: usize) -> Result<Vec<SignedChordDiagram>> {
    if m > MAX_EXHAUSTIVE_CHORDS {
        return Err(Error::TooLargeToEnumerate {
            what: "chord diagram",
            n: m,
            max: MAX_EXHAUSTIVE_CHORDS,
        });
    }
    let mut out = Vec::new();
    for word in double_occurrence_words(m) {
        for signs in 0..1u64 << m {
            out.push(SignedChordDiagram::from_indices(
                word.clone(),
                SubsetMask::from_bits(signs),
            )?);
        }
    }
    Ok(out)
}

/// `count` random diagrams with `m` chords: a uniformly shuffled pairing of
/// the positions and independent fair signs. Deterministic in `seed`
/// (PCG-64 seeded through `SeedableRng::seed_from_u64`).
pub fn sample_signed_chord_diagrams(m: usize, count: usize, seed: u64) -> Vec<SignedChordDiagram> {
    let mut rng = Pcg64::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut positions: Vec<usize> = (0..2 * m).collect();
            positions.shuffle(&mut rng);
            let mut raw = vec![0usize; 2 * m];
            for (chord, pair) in positions.chunks(2).enumerate() {
                raw[pair[0]] = chord;
                raw[pair[1]] = chord;
            }
            // Relabel by first appearance.
            let mut relabel = vec![usize::MAX; m];
            let mut next = 0;
            let word = raw
                .iter()
                .map(|&c| {
                    if relabel[c] == usize::MAX {
                        relabel[c] = next;
                        next += 1;
                    }
                    relabel[c]
                })
                .collect();
            let signs = SubsetMask::from_bits(rng.gen::<u64>() & SubsetMask::full(m).bits());
            SignedChordDiagram::from_indices(word, signs).expect("valid by construction")
        })
        .collect()
}

/// Uniformly random symmetric `n × n` matrix over GF(2).
pub fn random_symmetric_matrix<R: Rng>(rng: &mut R, n: usize) -> Gf2SymMatrix {
    let mut c = Gf2SymMatrix::zero(n);
    for i in 0..n {
        for j in i..n {
            c.set(i, j, rng.gen::<bool>());
        }
    }
    c
}

/// `count` vf-safe delta-matroids on `n` elements: `D(C)` for a random
/// symmetric `C`, then a random twuality at each element. The orbit of a
/// binary delta-matroid stays vf-safe.
pub fn sample_vf_safe(n: usize, count: usize, seed: u64) -> Vec<SetSystem> {
    let mut rng = Pcg64::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let d = from_matrix(&random_symmetric_matrix(&mut rng, n));
            let assignment: Vec<Twuality> = (0..n).map(|_| Twuality::ALL[rng.gen_range(0..6)]).collect();
            d.apply_assignment(&assignment)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn proper_system_counts() {
        assert_eq!(enumerate_proper_set_systems(1).unwrap().count(), 3);
        assert_eq!(enumerate_proper_set_systems(2).unwrap().count(), 15);
        assert_eq!(enumerate_proper_set_systems(3).unwrap().count(), 255);
        assert!(enumerate_proper_set_systems(5).is_err());
    }

    #[test]
    fn proper_systems_are_distinct_and_sorted() {
        let all: Vec<SetSystem> = enumerate_proper_set_systems(3).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(SetSystem::is_proper));
    }

    #[test]
    fn n1_systems_in_canonical_order() {
        let all: Vec<String> = enumerate_proper_set_systems(1)
            .unwrap()
            .map(|d| d.to_string())
            .collect();
        assert_eq!(all, ["({1},{∅})", "({1},{∅,{1}})", "({1},{{1}})"]);
    }

    #[test]
    fn words_for_two_chords() {
        assert_eq!(
            double_occurrence_words(2),
            vec![vec![0, 0, 1, 1], vec![0, 1, 0, 1], vec![0, 1, 1, 0]]
        );
        assert_eq!(double_occurrence_words(3).len(), 15);
        assert_eq!(double_occurrence_words(4).len(), 105);
    }

    #[test]
    fn diagram_counts() {
        assert_eq!(enumerate_signed_chord_diagrams(1).unwrap().len(), 2);
        assert_eq!(enumerate_signed_chord_diagrams(2).unwrap().len(), 12);
        assert_eq!(enumerate_signed_chord_diagrams(3).unwrap().len(), 120);
        assert!(enumerate_signed_chord_diagrams(4).is_err());
    }

    #[test]
    fn sampling_is_deterministic() {
        assert_eq!(
            sample_signed_chord_diagrams(4, 20, 7),
            sample_signed_chord_diagrams(4, 20, 7)
        );
        assert_ne!(
            sample_signed_chord_diagrams(4, 20, 7),
            sample_signed_chord_diagrams(4, 20, 8)
        );
        assert_eq!(sample_vf_safe(4, 10, 3), sample_vf_safe(4, 10, 3));
        for b in sample_signed_chord_diagrams(4, 20, 1) {
            assert_eq!(b.m(), 4);
        }
    }
}
