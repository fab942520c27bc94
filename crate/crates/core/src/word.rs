//! Words over the twist / loop-complementation alphabet and the six-element
//! group they generate.
//!
//! Letters act on a single element and are applied left to right, so the
//! word `*x` twists first and loop-complements second. Reduction uses the
//! relations `** = xx = (*x)^3 = 1`, realized by mapping each letter to a
//! transposition of `S3` and reading off the product.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// Twist, written `*`.
    Twist,
    /// Loop complementation, written `x`.
    LoopComplement,
}

impl Letter {
    pub fn ascii(self) -> char {
        match self {
            Letter::Twist => '*',
            Letter::LoopComplement => 'x',
        }
    }

    fn permutation(self) -> Perm {
        match self {
            Letter::Twist => Perm([1, 0, 2]),
            Letter::LoopComplement => Perm([0, 2, 1]),
        }
    }
}

/// A finite, not necessarily reduced, word over `{*, x}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TwualWord {
    letters: Vec<Letter>,
}

impl TwualWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        TwualWord { letters }
    }

    pub fn identity() -> Self {
        TwualWord::default()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The group element this word evaluates to.
    pub fn reduce(&self) -> Twuality {
        let perm = self
            .letters
            .iter()
            .fold(Perm::IDENTITY, |acc, l| acc.then(l.permutation()));
        Twuality::from_perm(perm)
    }

    /// The canonical spelling of this word's group element.
    pub fn normalize(&self) -> TwualWord {
        self.reduce().word()
    }

    /// Concatenation: `self` first, then `other`.
    pub fn concat(&self, other: &TwualWord) -> TwualWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        TwualWord { letters }
    }

    pub fn repeat(&self, times: usize) -> TwualWord {
        TwualWord {
            letters: self.letters.repeat(times),
        }
    }
}

impl From<Twuality> for TwualWord {
    fn from(t: Twuality) -> Self {
        t.word()
    }
}

impl fmt::Display for TwualWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|l| write!(f, "{}", l.ascii()))
    }
}

impl FromStr for TwualWord {
    type Err = Error;

    /// Accepts `*`/`∗` for twist and `x`/`×` for loop complementation.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '*' | '∗' => Ok(Letter::Twist),
                'x' | '×' => Ok(Letter::LoopComplement),
                _ => Err(Error::UnsupportedWord(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(TwualWord::new)
    }
}

/// One of the six reduced twuality words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Twuality {
    Identity,
    Twist,
    LoopComplement,
    TwistLoop,
    LoopTwist,
    TwistLoopTwist,
}

impl Twuality {
    pub const ALL: [Twuality; 6] = [
        Twuality::Identity,
        Twuality::Twist,
        Twuality::LoopComplement,
        Twuality::TwistLoop,
        Twuality::LoopTwist,
        Twuality::TwistLoopTwist,
    ];

    /// The five twualities, in the column order of the width-change table.
    pub const NONIDENTITY: [Twuality; 5] = [
        Twuality::Twist,
        Twuality::LoopComplement,
        Twuality::TwistLoop,
        Twuality::LoopTwist,
        Twuality::TwistLoopTwist,
    ];

    pub fn letters(self) -> &'static [Letter] {
        use Letter::{LoopComplement as X, Twist as S};
        match self {
            Twuality::Identity => &[],
            Twuality::Twist => &[S],
            Twuality::LoopComplement => &[X],
            Twuality::TwistLoop => &[S, X],
            Twuality::LoopTwist => &[X, S],
            Twuality::TwistLoopTwist => &[S, X, S],
        }
    }

    pub fn word(self) -> TwualWord {
        TwualWord::new(self.letters().to_vec())
    }

    pub fn is_identity(self) -> bool {
        self == Twuality::Identity
    }

    /// Position within [`Twuality::NONIDENTITY`].
    pub fn column(self) -> Option<usize> {
        Twuality::NONIDENTITY.iter().position(|&t| t == self)
    }

    /// Apply `self`, then `next`.
    pub fn then(self, next: Twuality) -> Twuality {
        Twuality::from_perm(self.perm().then(next.perm()))
    }

    pub fn inverse(self) -> Twuality {
        Twuality::ALL
            .into_iter()
            .find(|t| self.then(*t).is_identity())
            .expect("S3 is a group")
    }

    /// The word `* self *`.
    pub fn conjugate_by_twist(self) -> Twuality {
        Twuality::Twist.then(self).then(Twuality::Twist)
    }

    fn perm(self) -> Perm {
        self.letters()
            .iter()
            .fold(Perm::IDENTITY, |acc, l| acc.then(l.permutation()))
    }

    fn from_perm(perm: Perm) -> Twuality {
        Twuality::ALL
            .into_iter()
            .find(|t| t.perm() == perm)
            .expect("the six reduced words exhaust S3")
    }
}

impl fmt::Display for Twuality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            f.write_str("id")
        } else {
            write!(f, "{}", self.word())
        }
    }
}

impl FromStr for Twuality {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(s.parse::<TwualWord>()?.reduce())
    }
}

/// Permutation of {0, 1, 2}; `then` composes left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Perm([u8; 3]);

impl Perm {
    const IDENTITY: Perm = Perm([0, 1, 2]);

    fn then(self, next: Perm) -> Perm {
        Perm(self.0.map(|i| next.0[i as usize]))
    }
}
