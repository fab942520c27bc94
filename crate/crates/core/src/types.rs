//! Primal and dual p/u/t types of elements and the single-element width
//! change table for vf-safe delta-matroids.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::setsystem::SetSystem;
use crate::word::{TwualWord, Twuality};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeLetter {
    /// Not a ribbon loop.
    P,
    /// Orientable ribbon loop.
    U,
    /// Non-orientable ribbon loop.
    T,
}

impl TypeLetter {
    pub const ALL: [TypeLetter; 3] = [TypeLetter::P, TypeLetter::U, TypeLetter::T];

    fn ascii(self) -> char {
        match self {
            TypeLetter::P => 'p',
            TypeLetter::U => 'u',
            TypeLetter::T => 't',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementType {
    pub primal: TypeLetter,
    pub dual: TypeLetter,
}

impl ElementType {
    /// Row order of [`DELTA_TABLE`].
    pub const ROWS: [ElementType; 9] = {
        use TypeLetter::{P, T, U};
        [
            ElementType { primal: P, dual: P },
            ElementType { primal: U, dual: U },
            ElementType { primal: P, dual: U },
            ElementType { primal: U, dual: P },
            ElementType { primal: T, dual: P },
            ElementType { primal: T, dual: U },
            ElementType { primal: P, dual: T },
            ElementType { primal: U, dual: T },
            ElementType { primal: T, dual: T },
        ]
    };

    pub fn row(self) -> usize {
        ElementType::ROWS
            .iter()
            .position(|&t| t == self)
            .expect("all nine types are listed")
    }
}

impl fmt::Display for ElementType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.primal.ascii(), self.dual.ascii())
    }
}

impl FromStr for ElementType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letter = |c| match c {
            'p' => Some(TypeLetter::P),
            'u' => Some(TypeLetter::U),
            't' => Some(TypeLetter::T),
            _ => None,
        };
        let mut chars = s.chars();
        match (
            chars.next().and_then(letter),
            chars.next().and_then(letter),
            chars.next(),
        ) {
            (Some(primal), Some(dual), None) => Ok(ElementType { primal, dual }),
            _ => Err(Error::parse(1, format!("bad element type `{s}`"))),
        }
    }
}

/// `w(D^{•|e}) − w(D)` by element type (rows as in [`ElementType::ROWS`])
/// and twuality (columns as in [`Twuality::NONIDENTITY`]: `*`, `x`, `*x`,
/// `x*`, `*x*`).
pub const DELTA_TABLE: [[i8; 5]; 9] = [
    [2, 1, 2, 2, 1],     // pp
    [-2, 0, -1, -1, 0],  // uu
    [0, 0, 1, 0, 1],     // pu
    [0, 1, 0, 1, 0],     // up
    [1, 1, 1, 0, -1],    // tp
    [-1, 0, 0, -2, -1],  // tu
    [1, -1, 0, 1, 1],    // pt
    [-1, -1, -2, 0, 0],  // ut
    [0, -1, -1, -1, -1], // tt
];

/// Primal letter of element `e` from the two lowest strata.
fn primal_letter(min: &[SubsetMask], next: &[SubsetMask], e: usize) -> TypeLetter {
    if min.iter().any(|f| f.contains(e)) {
        TypeLetter::P
    } else if next.iter().any(|f| f.contains(e)) {
        TypeLetter::T
    } else {
        TypeLetter::U
    }
}

/// Dual letter of element `e` from the two highest strata.
fn dual_letter(max: &[SubsetMask], prev: &[SubsetMask], e: usize) -> TypeLetter {
    if max.iter().any(|f| !f.contains(e)) {
        TypeLetter::P
    } else if prev.iter().any(|f| !f.contains(e)) {
        TypeLetter::T
    } else {
        TypeLetter::U
    }
}

pub fn classify(d: &SetSystem, e: usize) -> Result<ElementType> {
    assert!(e < d.n(), "element {e} outside a ground set of size {}", d.n());
    let stats = d.width_stats()?;
    let above_min = d.stratum(stats.r_min + 1);
    let below_max = stats.r_max.checked_sub(1).map_or(&[][..], |size| d.stratum(size));
    Ok(ElementType {
        primal: primal_letter(d.stratum(stats.r_min), above_min, e),
        dual: dual_letter(d.stratum(stats.r_max), below_max, e),
    })
}

/// Primal type of `e` in `d` (only the lowest strata are inspected).
pub fn primal_type(d: &SetSystem, e: usize) -> Result<TypeLetter> {
    classify(d, e).map(|t| t.primal)
}

/// Table lookup of the width change for a non-identity word.
pub fn predicted_delta(t: ElementType, word: &TwualWord) -> Result<i8> {
    predicted_delta_for(t, word.reduce())
}

pub fn predicted_delta_for(t: ElementType, op: Twuality) -> Result<i8> {
    let column = op.column().ok_or(Error::IdentityWord)?;
    Ok(DELTA_TABLE[t.row()][column])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Violation {
    pub op: Twuality,
    pub measured: i64,
    pub predicted: i8,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Report {
    pub element: usize,
    pub element_type: ElementType,
    pub violations: Vec<Table1Violation>,
}

impl Table1Report {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Compares measured single-element width changes against [`DELTA_TABLE`].
/// Requires a vf-safe delta-matroid.
pub fn verify_table1(d: &SetSystem, e: usize) -> Result<Table1Report> {
    if !d.is_vf_safe() {
        return Err(Error::NotVfSafe);
    }
    Ok(measure_table1(d, e))
}

/// [`verify_table1`] without the vf-safety check, for callers that have
/// already established it.
pub(crate) fn measure_table1(d: &SetSystem, e: usize) -> Table1Report {
    let element_type = classify(d, e).expect("delta-matroids are proper");
    let base = d.width().expect("delta-matroids are proper") as i64;
    let single = SubsetMask::singleton(e);
    let violations = Twuality::NONIDENTITY
        .into_iter()
        .filter_map(|op| {
            let measured = d.apply_twuality(op, single).width().expect("proper") as i64 - base;
            let predicted = predicted_delta_for(element_type, op).expect("non-identity");
            (measured != predicted as i64).then_some(Table1Violation {
                op,
                measured,
                predicted,
            })
        })
        .collect();
    Table1Report {
        element: e,
        element_type,
        violations,
    }
}
