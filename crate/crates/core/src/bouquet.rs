//! Bouquets (one-vertex ribbon graphs) as signed chord diagrams.
//!
//! A bouquet is a cyclic word in which every chord label occurs twice, plus
//! the set of chords carrying a half-twist. Boundary components are counted
//! by face tracing over corners: each chord end at position `p` owns a left
//! corner `L(p)` and a right corner `R(p)`. The vertex boundary joins `R(p)`
//! to `L(p + 1)` cyclically; an untwisted chord with ends `x`, `y` joins
//! `L(x)`–`R(y)` and `R(x)`–`L(y)`, a twisted one `L(x)`–`L(y)` and
//! `R(x)`–`R(y)`. Boundary components are the cycles of the union of these
//! two perfect matchings.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::binary::{Gf2SymMatrix, LoopedSimpleGraph};
use crate::error::{Error, Result};
use crate::mask::{GroundSet, SubsetMask};
use crate::poly::{polynomial_of, WidthPolynomial, DEFAULT_ENUMERATION_CAP};
use crate::setsystem::SetSystem;
use crate::word::{Letter, TwualWord};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedChordDiagram {
    labels: Arc<GroundSet>,
    /// Label index at each position of the cyclic word.
    word: Vec<usize>,
    twisted: SubsetMask,
}

impl SignedChordDiagram {
    /// Labels are indexed in order of first appearance in `tokens`.
    pub fn new<S: AsRef<str>>(tokens: &[S], twisted: &[S]) -> Result<Self> {
        let mut names: Vec<&str> = Vec::new();
        let mut word = Vec::with_capacity(tokens.len());
        for token in tokens {
            let token = token.as_ref();
            let index = match names.iter().position(|&n| n == token) {
                Some(i) => i,
                None => {
                    names.push(token);
                    names.len() - 1
                }
            };
            word.push(index);
        }
        let labels = GroundSet::new(names.iter().copied())?;
        let twisted = labels
            .mask_of(twisted.iter().map(|s| s.as_ref()))
            .map_err(|e| match e {
                Error::UnknownElement(name) => Error::BadDiagram(format!("twisted label `{name}` is not a chord")),
                other => other,
            })?;
        SignedChordDiagram::from_parts(Arc::new(labels), word, twisted)
    }

    /// Builds from label indices; labels are named `a`, `b`, ... (then
    /// `c26`, `c27`, ...).
    pub fn from_indices(word: Vec<usize>, twisted: SubsetMask) -> Result<Self> {
        let m = word.len() / 2;
        let labels = GroundSet::new((0..m).map(default_label))?;
        SignedChordDiagram::from_parts(Arc::new(labels), word, twisted)
    }

    pub(crate) fn from_parts(labels: Arc<GroundSet>, word: Vec<usize>, twisted: SubsetMask) -> Result<Self> {
        let m = labels.len();
        let mut seen = vec![0usize; m];
        for &c in &word {
            if c >= m {
                return Err(Error::BadDiagram(format!("chord index {c} out of range")));
            }
            seen[c] += 1;
        }
        if let Some(c) = seen.iter().position(|&k| k != 2) {
            return Err(Error::BadDiagram(format!(
                "label `{}` occurs {} times, expected twice",
                labels.elements()[c].name,
                seen[c]
            )));
        }
        if !twisted.fits(m) {
            return Err(Error::BadDiagram("twisted set names unknown chords".into()));
        }
        Ok(SignedChordDiagram { labels, word, twisted })
    }

    pub fn labels(&self) -> &GroundSet {
        &self.labels
    }

    /// Number of chords.
    pub fn m(&self) -> usize {
        self.labels.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn twisted(&self) -> SubsetMask {
        self.twisted
    }

    /// Same diagram read from a different starting position.
    pub fn rotate(&self, k: usize) -> SignedChordDiagram {
        let mut word = self.word.clone();
        if !word.is_empty() {
            let k = k % word.len();
            word.rotate_left(k);
        }
        SignedChordDiagram {
            labels: Arc::clone(&self.labels),
            word,
            twisted: self.twisted,
        }
    }

    /// Number of boundary components of the spanning subgraph on chords `a`.
    pub fn boundary_components(&self, a: SubsetMask) -> Result<usize> {
        if !a.fits(self.m()) {
            return Err(Error::BadDiagram(format!("subset {a:?} names unknown chords")));
        }
        Ok(self.trace_faces(a))
    }

    fn trace_faces(&self, a: SubsetMask) -> usize {
        let kept: Vec<usize> = self.word.iter().copied().filter(|&c| a.contains(c)).collect();
        let k = kept.len();
        if k == 0 {
            return 1;
        }
        let left = |p: usize| 2 * p;
        let right = |p: usize| 2 * p + 1;
        let mut along_vertex = vec![0usize; 2 * k];
        let mut along_ribbon = vec![0usize; 2 * k];
        for p in 0..k {
            let (r, l) = (right(p), left((p + 1) % k));
            along_vertex[r] = l;
            along_vertex[l] = r;
        }
        let mut first_end = vec![usize::MAX; self.m()];
        for (p, &c) in kept.iter().enumerate() {
            let x = first_end[c];
            if x == usize::MAX {
                first_end[c] = p;
                continue;
            }
            let pairs = if self.twisted.contains(c) {
                [(left(x), left(p)), (right(x), right(p))]
            } else {
                [(left(x), right(p)), (right(x), left(p))]
            };
            for (s, t) in pairs {
                along_ribbon[s] = t;
                along_ribbon[t] = s;
            }
        }
        let mut visited = vec![false; 2 * k];
        let mut cycles = 0;
        for start in 0..2 * k {
            if visited[start] {
                continue;
            }
            cycles += 1;
            let mut corner = start;
            let mut via_vertex = true;
            while !visited[corner] {
                visited[corner] = true;
                corner = if via_vertex {
                    along_vertex[corner]
                } else {
                    along_ribbon[corner]
                };
                via_vertex = !via_vertex;
            }
        }
        cycles
    }

    /// Euler genus `1 + m − f` of the one-vertex ribbon graph.
    pub fn euler_genus(&self) -> usize {
        1 + self.m() - self.trace_faces(SubsetMask::full(self.m()))
    }

    /// Spanning quasi-trees as a set system over the chord labels.
    pub fn delta_matroid(&self) -> Result<SetSystem> {
        self.delta_matroid_capped(DEFAULT_ENUMERATION_CAP)
    }

    pub fn delta_matroid_capped(&self, cap: usize) -> Result<SetSystem> {
        let m = self.m();
        if m > cap || m >= 64 {
            return Err(Error::CapExceeded { n: m, cap });
        }
        let family: Vec<SubsetMask> = (0..1u64 << m)
            .map(SubsetMask::from_bits)
            .filter(|&a| self.trace_faces(a) == 1)
            .collect();
        Ok(SetSystem::from_parts(Arc::clone(&self.labels), family))
    }

    /// Half-twists added to the chords in `a`.
    pub fn petrial(&self, a: SubsetMask) -> SignedChordDiagram {
        assert!(a.fits(self.m()), "subset names unknown chords");
        SignedChordDiagram {
            labels: Arc::clone(&self.labels),
            word: self.word.clone(),
            twisted: self.twisted ^ a,
        }
    }

    /// Chords `u`, `v` are adjacent iff their ends alternate around the
    /// vertex; `u` is looped iff it is twisted.
    pub fn interleavement_graph(&self) -> LoopedSimpleGraph {
        let m = self.m();
        let mut ends = vec![Vec::with_capacity(2); m];
        for (p, &c) in self.word.iter().enumerate() {
            ends[c].push(p);
        }
        let mut adjacency = Gf2SymMatrix::zero(m);
        for u in 0..m {
            adjacency.set(u, u, self.twisted.contains(u));
            let (lo, hi) = (ends[u][0], ends[u][1]);
            for (v, other) in ends.iter().enumerate().skip(u + 1) {
                let inside = other.iter().filter(|&&p| lo < p && p < hi).count();
                adjacency.set(u, v, inside == 1);
            }
        }
        LoopedSimpleGraph::new(Arc::clone(&self.labels), adjacency).expect("one vertex per chord")
    }

    /// The partial-`word` polynomial by Euler genus, computed through the
    /// delta-matroid.
    pub fn twuality_polynomial(&self, word: &RWord) -> Result<WidthPolynomial> {
        let d = self.delta_matroid()?;
        polynomial_of(&d, eta(word).reduce(), DEFAULT_ENUMERATION_CAP)
    }
}

fn default_label(i: usize) -> String {
    if i < 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("c{i}")
    }
}

impl fmt::Display for SignedChordDiagram {
    /// The `.cd` text form.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.labels.names().collect();
        let tokens: Vec<&str> = self.word.iter().map(|&c| names[c]).collect();
        let twisted: Vec<&str> = self.twisted.iter().map(|c| names[c]).collect();
        writeln!(f, "word: {}", tokens.join(" "))?;
        if twisted.is_empty() {
            writeln!(f, "twisted:")
        } else {
            writeln!(f, "twisted: {}", twisted.join(" "))
        }
    }
}

pub fn bouquet_twuality_polynomial(b: &SignedChordDiagram, word: &RWord) -> Result<WidthPolynomial> {
    b.twuality_polynomial(word)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RLetter {
    /// Partial dual, written `d`.
    Delta,
    /// Partial Petrial, written `t`.
    Tau,
}

/// Word over `{δ, τ}`, applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RWord {
    letters: Vec<RLetter>,
}

impl RWord {
    pub fn new(letters: Vec<RLetter>) -> Self {
        RWord { letters }
    }

    pub fn letters(&self) -> &[RLetter] {
        &self.letters
    }

    /// The five non-identity reduced words `d`, `t`, `dt`, `td`, `dtd`.
    pub fn twualities() -> [RWord; 5] {
        ["d", "t", "dt", "td", "dtd"].map(|s| s.parse().expect("valid ribbon word"))
    }
}

impl FromStr for RWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'd' | 'δ' => Ok(RLetter::Delta),
                't' | 'τ' => Ok(RLetter::Tau),
                _ => Err(Error::UnsupportedWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(RWord::new)
    }
}

impl fmt::Display for RWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|l| match l {
            RLetter::Delta => f.write_str("d"),
            RLetter::Tau => f.write_str("t"),
        })
    }
}

/// `δ ↦ *`, `τ ↦ x`, letter by letter.
pub fn eta(word: &RWord) -> TwualWord {
    TwualWord::new(
        word.letters
            .iter()
            .map(|l| match l {
                RLetter::Delta => Letter::Twist,
                RLetter::Tau => Letter::LoopComplement,
            })
            .collect(),
    )
}
