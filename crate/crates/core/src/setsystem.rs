//! Set systems over ground sets of at most 64 elements, and the twist /
//! loop-complementation action on them.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::mask::{GroundSet, SubsetMask};
use crate::word::{Letter, TwualWord, Twuality};

/// A ground set together with a family of feasible subsets.
///
/// The family is kept sorted in canonical order (cardinality, then numeric
/// value) without duplicates, so two set systems are equal iff their ground
/// sets and family lists are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetSystem {
    ground: Arc<GroundSet>,
    family: Vec<SubsetMask>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WidthStats {
    pub r_min: usize,
    pub r_max: usize,
    pub width: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Predicates {
    pub proper: bool,
    pub normal: bool,
    pub dual_normal: bool,
}

impl SetSystem {
    pub fn new<I>(ground: GroundSet, family: I) -> Result<Self>
    where
        I: IntoIterator<Item = SubsetMask>,
    {
        SetSystem::with_ground(Arc::new(ground), family)
    }

    /// Builds a set system sharing an existing ground set.
    pub fn with_ground<I>(ground: Arc<GroundSet>, family: I) -> Result<Self>
    where
        I: IntoIterator<Item = SubsetMask>,
    {
        let family: Vec<SubsetMask> = family.into_iter().collect();
        for &mask in &family {
            ground.check(mask)?;
        }
        Ok(SetSystem::from_parts(ground, family))
    }

    /// Convenience constructor from element names.
    ///
    /// ```
    /// use twuality::SetSystem;
    /// let d = SetSystem::from_named(&["1", "2"], &[&[], &["1", "2"]]).unwrap();
    /// assert_eq!(d.to_string(), "({1,2},{∅,{1,2}})");
    /// ```
    pub fn from_named(names: &[&str], sets: &[&[&str]]) -> Result<Self> {
        let ground = GroundSet::new(names.iter().copied())?;
        let family = sets
            .iter()
            .map(|set| ground.mask_of(set.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        SetSystem::new(ground, family)
    }

    /// Ground set `1..=n` with feasible sets given by raw bit masks.
    pub fn from_bits(n: usize, family: &[u64]) -> Result<Self> {
        SetSystem::new(
            GroundSet::numbered(n)?,
            family.iter().copied().map(SubsetMask::from_bits),
        )
    }

    pub(crate) fn from_parts(ground: Arc<GroundSet>, mut family: Vec<SubsetMask>) -> Self {
        family.sort_unstable();
        family.dedup();
        SetSystem { ground, family }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn shared_ground(&self) -> Arc<GroundSet> {
        Arc::clone(&self.ground)
    }

    /// Size of the ground set.
    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn family(&self) -> &[SubsetMask] {
        &self.family
    }

    pub fn contains(&self, set: SubsetMask) -> bool {
        self.family.binary_search(&set).is_ok()
    }

    pub fn is_proper(&self) -> bool {
        !self.family.is_empty()
    }

    pub fn is_normal(&self) -> bool {
        self.contains(SubsetMask::EMPTY)
    }

    pub fn is_dual_normal(&self) -> bool {
        self.contains(self.ground.full())
    }

    pub fn predicates(&self) -> Predicates {
        Predicates {
            proper: self.is_proper(),
            normal: self.is_normal(),
            dual_normal: self.is_dual_normal(),
        }
    }

    fn with_family(&self, family: Vec<SubsetMask>) -> SetSystem {
        SetSystem::from_parts(Arc::clone(&self.ground), family)
    }

    fn assert_fits(&self, a: SubsetMask) {
        assert!(
            a.fits(self.n()),
            "subset {a:?} outside a ground set of size {}",
            self.n()
        );
    }

    /// `{A Δ X : X feasible}`.
    ///
    /// # Panics
    /// If `a` has members outside the ground set.
    pub fn twist(&self, a: SubsetMask) -> SetSystem {
        self.assert_fits(a);
        self.with_family(twist_family(&self.family, a))
    }

    /// The twist by the whole ground set.
    pub fn dual(&self) -> SetSystem {
        self.twist(self.ground.full())
    }

    /// Loop complementation on every element of `a`, in ascending index order.
    ///
    /// # Panics
    /// If `a` has members outside the ground set.
    pub fn loop_complement(&self, a: SubsetMask) -> SetSystem {
        self.assert_fits(a);
        let family = a
            .iter()
            .fold(self.family.clone(), |fam, e| loop_complement_family(&fam, e));
        self.with_family(family)
    }

    /// Applies the letters of `word` left to right to each element of `a`.
    ///
    /// # Panics
    /// If `a` has members outside the ground set.
    pub fn apply_word(&self, word: &TwualWord, a: SubsetMask) -> SetSystem {
        self.assert_fits(a);
        self.with_family(apply_letters(self.family.clone(), word.letters(), a))
    }

    /// Same as [`SetSystem::apply_word`] with the canonical spelling of `t`.
    pub fn apply_twuality(&self, t: Twuality, a: SubsetMask) -> SetSystem {
        self.assert_fits(a);
        self.with_family(apply_letters(self.family.clone(), t.letters(), a))
    }

    /// Applies `assignment[i]` to element `i`. Shorter assignments leave the
    /// remaining elements untouched.
    pub fn apply_assignment(&self, assignment: &[Twuality]) -> SetSystem {
        assert!(assignment.len() <= self.n(), "assignment longer than the ground set");
        let family = assignment.iter().enumerate().fold(self.family.clone(), |fam, (e, t)| {
            apply_letters(fam, t.letters(), SubsetMask::singleton(e))
        });
        self.with_family(family)
    }

    /// Direct sum; the elements of `other` are re-indexed after those of `self`.
    pub fn direct_sum(&self, other: &SetSystem) -> Result<SetSystem> {
        if let Some(clash) = other.ground.names().find(|name| self.ground.index_of(name).is_some()) {
            return Err(Error::NameCollision(clash.to_string()));
        }
        let ground = GroundSet::new(self.ground.names().chain(other.ground.names()))?;
        let shift = self.n();
        let family = self
            .family
            .iter()
            .flat_map(|&f| {
                other
                    .family
                    .iter()
                    .map(move |&g| f | SubsetMask::from_bits(g.bits() << shift))
            })
            .collect();
        Ok(SetSystem::from_parts(Arc::new(ground), family))
    }

    pub fn width_stats(&self) -> Result<WidthStats> {
        match (self.family.first(), self.family.last()) {
            (Some(lo), Some(hi)) => Ok(WidthStats {
                r_min: lo.len(),
                r_max: hi.len(),
                width: hi.len() - lo.len(),
            }),
            _ => Err(Error::Improper),
        }
    }

    pub fn width(&self) -> Result<usize> {
        self.width_stats().map(|s| s.width)
    }

    /// All feasible sets of cardinality `size` (a contiguous run of the family).
    pub fn stratum(&self, size: usize) -> &[SubsetMask] {
        let lo = self.family.partition_point(|f| f.len() < size);
        let hi = self.family.partition_point(|f| f.len() <= size);
        &self.family[lo..hi]
    }

    /// The feasible sets of size `r_min + offset` and of size `r_max - offset`.
    pub fn feasible_strata(&self, offset: usize) -> Result<(&[SubsetMask], &[SubsetMask])> {
        let stats = self.width_stats()?;
        if offset > stats.width {
            return Err(Error::StratumOutOfRange {
                offset,
                width: stats.width,
            });
        }
        Ok((self.stratum(stats.r_min + offset), self.stratum(stats.r_max - offset)))
    }

    /// Bouchet's symmetric exchange axiom, checked exhaustively.
    pub fn is_delta_matroid(&self) -> bool {
        if self.family.is_empty() {
            return false;
        }
        let member = Membership::new(self);
        self.family.iter().all(|&x| {
            self.family.iter().all(|&y| {
                let diff = x ^ y;
                diff.iter().all(|u| {
                    let xu = x.toggle(u);
                    member.contains(xu) || diff.iter().any(|v| v != u && member.contains(xu.toggle(v)))
                })
            })
        })
    }

    /// True iff every combination of per-element twualities yields a
    /// delta-matroid.
    ///
    /// Per-element operators commute across elements and a trailing twist
    /// never changes whether a set system is a delta-matroid, so it suffices
    /// to try the right coset representatives `{id, x, *x}` of the twist
    /// subgroup at each element: 3^n systems instead of 6^n.
    pub fn is_vf_safe(&self) -> bool {
        const REPS: [Twuality; 3] = [Twuality::Identity, Twuality::LoopComplement, Twuality::TwistLoop];
        self.all_assignments_are_delta_matroids(&REPS)
    }

    /// The literal 6^n check over every per-element assignment of a reduced
    /// word. Agrees with [`SetSystem::is_vf_safe`]; kept as its reference.
    pub fn is_vf_safe_exhaustive(&self) -> bool {
        self.all_assignments_are_delta_matroids(&Twuality::ALL)
    }

    fn all_assignments_are_delta_matroids(&self, choices: &[Twuality]) -> bool {
        fn go(sys: &SetSystem, element: usize, choices: &[Twuality]) -> bool {
            if element == sys.n() {
                return sys.is_delta_matroid();
            }
            let e = SubsetMask::singleton(element);
            choices
                .iter()
                .all(|&t| go(&sys.apply_twuality(t, e), element + 1, choices))
        }
        go(self, 0, choices)
    }
}

fn twist_family(family: &[SubsetMask], a: SubsetMask) -> Vec<SubsetMask> {
    let mut out: Vec<SubsetMask> = family.iter().map(|&f| f ^ a).collect();
    out.sort_unstable();
    out
}

/// `F Δ {F ∪ e : F ∈ F, e ∉ F}` on a canonically sorted family.
fn loop_complement_family(family: &[SubsetMask], e: usize) -> Vec<SubsetMask> {
    let bit = SubsetMask::singleton(e);
    // Adding a fixed absent bit preserves canonical order.
    let toggled: Vec<SubsetMask> = family.iter().filter(|f| !f.contains(e)).map(|&f| f | bit).collect();
    symmetric_difference(family, &toggled)
}

fn apply_letters(mut family: Vec<SubsetMask>, letters: &[Letter], a: SubsetMask) -> Vec<SubsetMask> {
    for e in a.iter() {
        for letter in letters {
            family = match letter {
                Letter::Twist => twist_family(&family, SubsetMask::singleton(e)),
                Letter::LoopComplement => loop_complement_family(&family, e),
            };
        }
    }
    family
}

fn symmetric_difference(a: &[SubsetMask], b: &[SubsetMask]) -> Vec<SubsetMask> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Constant-time membership for small ground sets, binary search otherwise.
enum Membership<'a> {
    Dense(Vec<u64>),
    Sorted(&'a SetSystem),
}

impl<'a> Membership<'a> {
    const DENSE_LIMIT: usize = 20;

    fn new(sys: &'a SetSystem) -> Self {
        if sys.n() > Self::DENSE_LIMIT {
            return Membership::Sorted(sys);
        }
        let mut words = vec![0u64; (1usize << sys.n()).div_ceil(64)];
        for f in &sys.family {
            let b = f.bits() as usize;
            words[b / 64] |= 1 << (b % 64);
        }
        Membership::Dense(words)
    }

    fn contains(&self, set: SubsetMask) -> bool {
        match self {
            Membership::Dense(words) => {
                let b = set.bits() as usize;
                words[b / 64] >> (b % 64) & 1 == 1
            }
            Membership::Sorted(sys) => sys.contains(set),
        }
    }
}

impl Ord for SetSystem {
    /// Smaller ground sets first, then lexicographic on the canonical family
    /// list, then element names.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.family.cmp(&other.family))
            .then_with(|| self.ground.names().cmp(other.ground.names()))
    }
}

impl PartialOrd for SetSystem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SetSystem {
    /// Set-builder notation, e.g. `({1,2},{∅,{1,2}})`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.ground.names().collect();
        write!(f, "({{{}}},{{", names.join(","))?;
        for (k, set) in self.family.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            if set.is_empty() {
                f.write_str("∅")?;
            } else {
                let members: Vec<&str> = set.iter().map(|i| names[i]).collect();
                write!(f, "{{{}}}", members.join(","))?;
            }
        }
        f.write_str("})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(n: usize, family: &[u64]) -> SetSystem {
        SetSystem::from_bits(n, family).unwrap()
    }

    fn word(s: &str) -> TwualWord {
        s.parse().unwrap()
    }

    const E1: SubsetMask = SubsetMask::singleton(0);

    #[test]
    fn family_is_canonical() {
        let d = sys(2, &[3, 0, 3, 1]);
        assert_eq!(d.family(), &[0, 1, 3].map(SubsetMask::from_bits));
        assert_eq!(d, sys(2, &[1, 3, 0]));
    }

    #[test]
    fn out_of_range_family_rejected() {
        assert!(matches!(
            SetSystem::from_bits(2, &[4]),
            Err(Error::MaskOutOfRange { .. })
        ));
    }

    #[test]
    fn twist_examples() {
        assert_eq!(sys(1, &[0, 1]).twist(E1), sys(1, &[0, 1]));
        assert_eq!(sys(2, &[0, 3]).twist(E1), sys(2, &[1, 2]));
        assert_eq!(sys(1, &[0]).twist(E1), sys(1, &[1]));
    }

    #[test]
    #[should_panic]
    fn twist_outside_ground_set_panics() {
        sys(1, &[0]).twist(SubsetMask::from_bits(2));
    }

    #[test]
    fn loop_complement_examples() {
        assert_eq!(sys(1, &[0, 1]).loop_complement(E1), sys(1, &[0]));
        assert_eq!(sys(1, &[0]).loop_complement(E1), sys(1, &[0, 1]));
        // e=1 removes {1}; e=2 then adds {2}.
        assert_eq!(
            sys(2, &[0, 1, 3]).loop_complement(SubsetMask::full(2)),
            sys(2, &[0, 2, 3])
        );
    }

    #[test]
    fn improper_stays_improper() {
        let d = sys(2, &[]);
        assert_eq!(d.twist(SubsetMask::full(2)), d);
        assert_eq!(d.loop_complement(SubsetMask::full(2)), d);
    }

    #[test]
    fn word_examples() {
        let d = sys(1, &[0, 1]);
        assert_eq!(d.apply_word(&word("*x"), E1), sys(1, &[0]));
        assert_eq!(d.apply_word(&word("x*"), E1), sys(1, &[1]));
        let any = sys(3, &[1, 6, 7]);
        assert_eq!(any.apply_word(&word("**"), SubsetMask::from_bits(5)), any);
    }

    #[test]
    fn direct_sum_examples() {
        let a = SetSystem::from_named(&["1"], &[&[]]).unwrap();
        let b = SetSystem::from_named(&["2"], &[&["2"]]).unwrap();
        assert_eq!(a.direct_sum(&b).unwrap(), sys(2, &[2]));

        let c = SetSystem::from_named(&["1"], &[&[], &["1"]]).unwrap();
        let d = SetSystem::from_named(&["2"], &[&[], &["2"]]).unwrap();
        let s = c.direct_sum(&d).unwrap();
        assert_eq!(s, sys(2, &[0, 1, 2, 3]));
        assert_eq!(s.width().unwrap(), c.width().unwrap() + d.width().unwrap());
        assert_eq!(s.width().unwrap(), 2);
    }

    #[test]
    fn direct_sum_name_collision() {
        let a = sys(1, &[0]);
        assert_eq!(a.direct_sum(&a), Err(Error::NameCollision("1".into())));
    }

    #[test]
    fn width_examples() {
        assert_eq!(
            sys(2, &[0, 3]).width_stats().unwrap(),
            WidthStats {
                r_min: 0,
                r_max: 2,
                width: 2
            }
        );
        assert_eq!(sys(1, &[1]).width().unwrap(), 0);
        assert_eq!(sys(2, &[0, 1, 3]).width().unwrap(), 2);
        assert_eq!(sys(1, &[]).width_stats(), Err(Error::Improper));
    }

    #[test]
    fn strata_examples() {
        let m = |b: &[u64]| b.iter().copied().map(SubsetMask::from_bits).collect::<Vec<_>>();
        let d = sys(2, &[0, 3]);
        let (lo, hi) = d.feasible_strata(1).unwrap();
        assert!(lo.is_empty() && hi.is_empty());

        let d = sys(2, &[0, 1, 3]);
        let (lo, hi) = d.feasible_strata(0).unwrap();
        assert_eq!((lo.to_vec(), hi.to_vec()), (m(&[0]), m(&[3])));

        let d = sys(1, &[0, 1]);
        let (lo, hi) = d.feasible_strata(1).unwrap();
        assert_eq!((lo.to_vec(), hi.to_vec()), (m(&[1]), m(&[0])));

        assert_eq!(
            d.feasible_strata(2),
            Err(Error::StratumOutOfRange { offset: 2, width: 1 })
        );
        assert_eq!(sys(1, &[]).feasible_strata(0), Err(Error::Improper));
    }

    #[test]
    fn predicate_examples() {
        let p = |proper, normal, dual_normal| Predicates {
            proper,
            normal,
            dual_normal,
        };
        assert_eq!(sys(1, &[0, 1]).predicates(), p(true, true, true));
        assert_eq!(sys(1, &[0]).predicates(), p(true, true, false));
        assert_eq!(sys(1, &[]).predicates(), p(false, false, false));
    }

    #[test]
    fn delta_matroid_examples() {
        assert!(!sys(3, &[0b001, 0b110]).is_delta_matroid());
        assert!(sys(1, &[0, 1]).is_delta_matroid());
        assert!(sys(2, &[0, 3]).is_delta_matroid());
        assert!(!sys(1, &[]).is_delta_matroid());
    }

    #[test]
    fn vf_safe_examples() {
        assert!(sys(1, &[0, 1]).is_vf_safe());
        assert!(!sys(1, &[]).is_vf_safe());
        assert!(!sys(3, &[0b001, 0b110]).is_vf_safe());
    }

    #[test]
    fn sparse_membership_path() {
        // 21 elements forces the binary-search membership.
        let names: Vec<String> = (0..21).map(|i| format!("e{i}")).collect();
        let ground = GroundSet::new(names).unwrap();
        let d = SetSystem::new(ground, [SubsetMask::EMPTY, SubsetMask::from_bits(0b11)]).unwrap();
        assert!(d.is_delta_matroid());
        let bad = SetSystem::new(
            d.ground().clone(),
            [SubsetMask::from_bits(1), SubsetMask::from_bits(0b110)],
        )
        .unwrap();
        assert!(!bad.is_delta_matroid());
    }

    #[test]
    fn display_uses_set_notation() {
        assert_eq!(sys(2, &[0, 1, 3]).to_string(), "({1,2},{∅,{1},{1,2}})");
        assert_eq!(sys(1, &[]).to_string(), "({1},{})");
    }
}
