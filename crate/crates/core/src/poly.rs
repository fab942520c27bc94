//! Width polynomials: `Σ_{A ⊆ E} z^{w(D^{•|A})}` by enumeration of all
//! subsets, plus shape queries (gaps, interpolation, monomials,
//! log-concavity).

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::setsystem::SetSystem;
use crate::word::{TwualWord, Twuality};

/// Default largest ground set for which polynomials are enumerated.
pub const DEFAULT_ENUMERATION_CAP: usize = 16;

/// Integer polynomial in `z`, coefficient `k` counting subsets of width `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WidthPolynomial {
    coefficients: Vec<u64>,
    n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GapProfile {
    pub is_interpolating: bool,
    pub max_gap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonomialCheck {
    pub is_monomial: bool,
    pub characterization_holds: bool,
}

impl WidthPolynomial {
    /// Trailing zero coefficients are dropped.
    pub fn new(mut coefficients: Vec<u64>, n: usize) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        WidthPolynomial { coefficients, n }
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> u64 {
        self.coefficients.get(k).copied().unwrap_or(0)
    }

    /// Ground-set size the polynomial was computed over.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    /// Sum of coefficients, i.e. the value at `z = 1`.
    pub fn total(&self) -> u128 {
        self.coefficients.iter().map(|&c| c as u128).sum()
    }

    pub fn term_count(&self) -> usize {
        self.coefficients.iter().filter(|&&c| c != 0).count()
    }

    pub fn is_monomial(&self) -> bool {
        self.term_count() == 1
    }

    /// Exact evaluation by Horner's rule.
    pub fn evaluate(&self, z: &BigRational) -> BigRational {
        self.coefficients.iter().rev().fold(BigRational::zero(), |acc, &c| {
            acc * z + BigRational::from_integer(BigInt::from(c))
        })
    }

    fn support(&self) -> Option<(usize, usize)> {
        let lo = self.coefficients.iter().position(|&c| c != 0)?;
        Some((lo, self.coefficients.len() - 1))
    }

    /// Longest run of zero coefficients strictly inside the support.
    pub fn gap_profile(&self) -> Result<GapProfile> {
        let (lo, hi) = self.support().ok_or(Error::ZeroPolynomial)?;
        let mut max_gap = 0;
        let mut run = 0;
        for &c in &self.coefficients[lo..=hi] {
            if c == 0 {
                run += 1;
            } else {
                max_gap = max_gap.max(run);
                run = 0;
            }
        }
        Ok(GapProfile {
            is_interpolating: max_gap == 0,
            max_gap,
        })
    }

    /// `c_i^2 >= c_{i-1} c_{i+1}` at every interior index of the support.
    pub fn is_log_concave(&self) -> bool {
        let Some((lo, hi)) = self.support() else {
            return true;
        };
        let c = |i: usize| self.coefficients[i] as u128;
        (lo + 1..hi).all(|i| c(i) * c(i) >= c(i - 1) * c(i + 1))
    }

    /// `width,count` rows, one per degree from 0 to the degree.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("width,count\n");
        for (k, c) in self.coefficients.iter().enumerate() {
            out.push_str(&format!("{k},{c}\n"));
        }
        out
    }
}

impl Mul for &WidthPolynomial {
    type Output = WidthPolynomial;

    fn mul(self, rhs: &WidthPolynomial) -> WidthPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return WidthPolynomial::new(Vec::new(), self.n + rhs.n);
        }
        let mut out = vec![0u64; self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, &a) in self.coefficients.iter().enumerate() {
            for (j, &b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        WidthPolynomial::new(out, self.n + rhs.n)
    }
}

impl fmt::Display for WidthPolynomial {
    /// `c0 + c1 z + c2 z^2 ...` with zero terms omitted and unit
    /// coefficients elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match (k, c) {
                (0, c) => c.to_string(),
                (1, 1) => "z".to_string(),
                (1, c) => format!("{c} z"),
                (k, 1) => format!("z^{k}"),
                (k, c) => format!("{c} z^{k}"),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

/// The partial-`word` polynomial of `d`, with the default enumeration cap.
pub fn twuality_polynomial(d: &SetSystem, word: &TwualWord) -> Result<WidthPolynomial> {
    twuality_polynomial_capped(d, word, DEFAULT_ENUMERATION_CAP)
}

pub fn twuality_polynomial_capped(d: &SetSystem, word: &TwualWord, cap: usize) -> Result<WidthPolynomial> {
    polynomial_of(d, word.reduce(), cap)
}

/// Enumerates every subset `A`, computes `w(D^{t|A})` afresh and tallies.
pub fn polynomial_of(d: &SetSystem, t: Twuality, cap: usize) -> Result<WidthPolynomial> {
    let n = d.n();
    if !d.is_proper() {
        return Err(Error::Improper);
    }
    if n > cap || n >= 64 {
        return Err(Error::CapExceeded { n, cap });
    }
    let counts = (0..1u64 << n)
        .into_par_iter()
        .fold(
            || vec![0u64; n + 1],
            |mut acc, bits| {
                let image = d.apply_twuality(t, SubsetMask::from_bits(bits));
                let w = image.width().expect("twualities preserve properness");
                acc[w] += 1;
                acc
            },
        )
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let poly = WidthPolynomial::new(counts, n);
    assert_eq!(poly.total(), 1u128 << n, "coefficients must sum to 2^n");
    Ok(poly)
}

/// Checks whether the `x` (resp. `*x*`) polynomial is a monomial exactly
/// when the family is `{E}` (resp. `{∅}`).
pub fn monomial_check(d: &SetSystem, word: &TwualWord) -> Result<MonomialCheck> {
    let t = word.reduce();
    let expected_family = match t {
        Twuality::LoopComplement => d.ground().full(),
        Twuality::TwistLoopTwist => SubsetMask::EMPTY,
        _ => return Err(Error::UnsupportedWord(word.to_string())),
    };
    if !d.is_vf_safe() {
        return Err(Error::NotVfSafe);
    }
    let is_monomial = polynomial_of(d, t, DEFAULT_ENUMERATION_CAP)?.is_monomial();
    let family_matches = d.family() == [expected_family];
    Ok(MonomialCheck {
        is_monomial,
        characterization_holds: is_monomial == family_matches,
    })
}
