//! Subsets of small ground sets as machine words, and the ground sets themselves.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Sub};

use crate::error::{Error, Result};

/// Largest supported ground set: one bit per element in a `u64`.
pub const MAX_GROUND_SIZE: usize = 64;

/// A subset of a ground set, bit `i` set iff element `i` is a member.
///
/// Ordering is the canonical family order: by cardinality first, then by
/// numeric value.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct SubsetMask(u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub const fn from_bits(bits: u64) -> Self {
        SubsetMask(bits)
    }

    /// The whole ground set of size `n`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            SubsetMask(u64::MAX)
        } else {
            SubsetMask((1u64 << n) - 1)
        }
    }

    pub const fn singleton(index: usize) -> Self {
        SubsetMask(1u64 << index)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        SubsetMask(indices.into_iter().fold(0, |acc, i| acc | (1u64 << i)))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, index: usize) -> bool {
        index < 64 && self.0 >> index & 1 == 1
    }

    pub const fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    /// True iff no bit at position `n` or above is set.
    pub const fn fits(self, n: usize) -> bool {
        self.is_subset_of(SubsetMask::full(n))
    }

    pub const fn toggle(self, index: usize) -> Self {
        SubsetMask(self.0 ^ (1u64 << index))
    }

    /// Member indices in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }
}

impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitXor for SubsetMask {
    type Output = SubsetMask;
    fn bitxor(self, rhs: Self) -> Self {
        SubsetMask(self.0 ^ rhs.0)
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, rhs: Self) -> Self {
        SubsetMask(self.0 | rhs.0)
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, rhs: Self) -> Self {
        SubsetMask(self.0 & rhs.0)
    }
}

impl Sub for SubsetMask {
    type Output = SubsetMask;
    fn sub(self, rhs: Self) -> Self {
        SubsetMask(self.0 & !rhs.0)
    }
}

/// Iterator over the member indices of a [`SubsetMask`].
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

/// Iterates over every subset of an `n`-element ground set in ascending
/// numeric order.
pub fn all_subsets(n: usize) -> impl Iterator<Item = SubsetMask> {
    assert!(n < 64, "cannot enumerate subsets of a {n}-element set");
    (0..1u64 << n).map(SubsetMask)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    pub name: String,
    pub index: usize,
}

/// An ordered list of distinctly named elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    elements: Vec<Element>,
}

impl GroundSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut elements: Vec<Element> = Vec::new();
        let mut seen = HashMap::new();
        for (index, name) in names.into_iter().enumerate() {
            let name = name.into();
            if seen.insert(name.clone(), index).is_some() {
                return Err(Error::DuplicateName(name));
            }
            elements.push(Element { name, index });
        }
        if elements.len() > MAX_GROUND_SIZE {
            return Err(Error::GroundSetTooLarge(elements.len()));
        }
        Ok(GroundSet { elements })
    }

    /// Elements named `1`, `2`, ..., `n`.
    pub fn numbered(n: usize) -> Result<Self> {
        GroundSet::new((1..=n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.elements.iter().map(|e| e.name.as_str())
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e.name == name)
    }

    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.len())
    }

    /// Resolves a list of element names into a mask.
    pub fn mask_of<'a, I: IntoIterator<Item = &'a str>>(&self, names: I) -> Result<SubsetMask> {
        names.into_iter().try_fold(SubsetMask::EMPTY, |acc, name| {
            self.index_of(name)
                .map(|i| acc | SubsetMask::singleton(i))
                .ok_or_else(|| Error::UnknownElement(name.to_string()))
        })
    }

    pub fn check(&self, mask: SubsetMask) -> Result<()> {
        if mask.fits(self.len()) {
            Ok(())
        } else {
            Err(Error::MaskOutOfRange {
                mask: mask.bits(),
                n: self.len(),
            })
        }
    }

    /// Space-separated member names, `-` for the empty set.
    pub fn render(&self, mask: SubsetMask) -> String {
        if mask.is_empty() {
            return "-".to_string();
        }
        mask.iter()
            .map(|i| self.elements[i].name.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_size_then_value() {
        let mut v: Vec<_> = [3u64, 4, 0, 1, 6, 2].into_iter().map(SubsetMask::from_bits).collect();
        v.sort();
        let bits: Vec<u64> = v.iter().map(|m| m.bits()).collect();
        assert_eq!(bits, vec![0, 1, 2, 4, 3, 6]);
    }

    #[test]
    fn members_ascend() {
        let m = SubsetMask::from_indices([5, 0, 63]);
        assert_eq!(m.iter().collect::<Vec<_>>(), vec![0, 5, 63]);
        assert_eq!(m.len(), 3);
        assert!(!m.fits(63));
        assert!(m.fits(64));
    }

    #[test]
    fn duplicate_names_rejected() {
        assert_eq!(GroundSet::new(["a", "b", "a"]), Err(Error::DuplicateName("a".into())));
    }

    #[test]
    fn oversized_ground_set_rejected() {
        assert!(matches!(GroundSet::numbered(65), Err(Error::GroundSetTooLarge(65))));
        assert_eq!(GroundSet::numbered(64).unwrap().full(), SubsetMask::from_bits(u64::MAX));
    }

    #[test]
    fn render_and_resolve() {
        let g = GroundSet::new(["x", "y", "z"]).unwrap();
        let m = g.mask_of(["z", "x"]).unwrap();
        assert_eq!(g.render(m), "x z");
        assert_eq!(g.render(SubsetMask::EMPTY), "-");
        assert!(matches!(g.mask_of(["w"]), Err(Error::UnknownElement(_))));
    }
}
