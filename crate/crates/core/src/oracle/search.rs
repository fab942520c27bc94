//! Counterexample search over registered properties.
//!
//! Set-system properties sweep every vf-safe delta-matroid on
//! `1..=max_ground_size` elements in canonical order, then (if
//! `sample_count > 0`) seeded samples on one more element. Bouquet
//! properties do the same over chord diagrams. The reported witness is the
//! first failing instance in that order regardless of thread count.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::enumerate::{
    enumerate_signed_chord_diagrams, sample_signed_chord_diagrams, sample_vf_safe, vf_safe_delta_matroids,
};
use super::EnumerationBudget;
use crate::binary::intersection_graph;
use crate::bouquet::{RWord, SignedChordDiagram};
use crate::error::{Error, Result};
use crate::format::{write_chord_diagram, write_set_system};
use crate::mask::all_subsets;
use crate::poly::{monomial_check, polynomial_of, DEFAULT_ENUMERATION_CAP};
use crate::setsystem::SetSystem;
use crate::types::measure_table1;
use crate::word::Twuality;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    /// Every word's polynomial has no gap of two or more.
    GapAtMostOne,
    /// The polynomial of the given word is interpolating.
    Interpolating(Twuality),
    /// The polynomial of the given word is log-concave.
    LogConcave(Twuality),
    /// Single-element width changes match the type table.
    Table1,
    /// Monomial iff `{E}` (for `x`) or `{∅}` (for `*x*`).
    Monomial(Twuality),
    /// Euler genus equals the width of the bouquet's delta-matroid.
    GenusWidth,
    /// Partial Petrials map to loop complementations.
    PetrialLoopComplement,
    /// Interleavement graph equals the reconstructed intersection graph.
    InterleavementGraph,
    /// Equal interleavement graphs give equal polynomials for all words.
    GraphDeterminesPolynomial,
}

impl Property {
    pub fn all() -> Vec<Property> {
        let mut out = vec![Property::GapAtMostOne, Property::Table1];
        out.extend(Twuality::NONIDENTITY.map(Property::Interpolating));
        out.extend(Twuality::ALL.map(Property::LogConcave));
        out.push(Property::Monomial(Twuality::LoopComplement));
        out.push(Property::Monomial(Twuality::TwistLoopTwist));
        out.extend([
            Property::GenusWidth,
            Property::PetrialLoopComplement,
            Property::InterleavementGraph,
            Property::GraphDeterminesPolynomial,
        ]);
        out
    }

    pub fn is_bouquet_property(self) -> bool {
        matches!(
            self,
            Property::GenusWidth
                | Property::PetrialLoopComplement
                | Property::InterleavementGraph
                | Property::GraphDeterminesPolynomial
        )
    }
}

/// Word suffix used in property ids: `*` is spelled `s` so ids stay
/// shell-friendly.
fn word_id(t: Twuality) -> &'static str {
    match t {
        Twuality::Identity => "id",
        Twuality::Twist => "s",
        Twuality::LoopComplement => "x",
        Twuality::TwistLoop => "sx",
        Twuality::LoopTwist => "xs",
        Twuality::TwistLoopTwist => "sxs",
    }
}

fn parse_word_id(s: &str) -> Option<Twuality> {
    Twuality::ALL.into_iter().find(|&t| word_id(t) == s)
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::GapAtMostOne => f.write_str("gap-le-1"),
            Property::Interpolating(t) => write!(f, "interpolating-{}", word_id(*t)),
            Property::LogConcave(t) => write!(f, "log-concave-{}", word_id(*t)),
            Property::Table1 => f.write_str("table1"),
            Property::Monomial(t) => write!(f, "monomial-{}", word_id(*t)),
            Property::GenusWidth => f.write_str("genus-width"),
            Property::PetrialLoopComplement => f.write_str("petrial-loop-complement"),
            Property::InterleavementGraph => f.write_str("interleavement-graph"),
            Property::GraphDeterminesPolynomial => f.write_str("graph-determines-polynomial"),
        }
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownProperty(s.to_string());
        let with_word = |rest: &str, make: fn(Twuality) -> Property| parse_word_id(rest).map(make).ok_or_else(unknown);
        if let Some(rest) = s.strip_prefix("interpolating-") {
            return match parse_word_id(rest) {
                Some(Twuality::Identity) | None => Err(unknown()),
                Some(t) => Ok(Property::Interpolating(t)),
            };
        }
        if let Some(rest) = s.strip_prefix("log-concave-") {
            return with_word(rest, Property::LogConcave);
        }
        if let Some(rest) = s.strip_prefix("monomial-") {
            return match parse_word_id(rest) {
                Some(t @ (Twuality::LoopComplement | Twuality::TwistLoopTwist)) => Ok(Property::Monomial(t)),
                _ => Err(unknown()),
            };
        }
        Property::all()
            .into_iter()
            .find(|p| p.to_string() == s)
            .ok_or_else(unknown)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessInstance {
    SetSystem(SetSystem),
    Bouquet(SignedChordDiagram),
    BouquetPair(SignedChordDiagram, SignedChordDiagram),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub property: Property,
    pub instance: WitnessInstance,
    /// What failed, e.g. the offending word and polynomial.
    pub detail: String,
}

impl fmt::Display for Witness {
    /// Header, detail, then the instance in its text format(s).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# witness for {}", self.property)?;
        writeln!(f, "# {}", self.detail)?;
        match &self.instance {
            WitnessInstance::SetSystem(d) => f.write_str(&write_set_system(d)),
            WitnessInstance::Bouquet(b) => f.write_str(&write_chord_diagram(b)),
            WitnessInstance::BouquetPair(a, b) => {
                f.write_str(&write_chord_diagram(a))?;
                writeln!(f, "# ---")?;
                f.write_str(&write_chord_diagram(b))
            }
        }
    }
}

/// Returns the first violating instance within `budget`, or `None`.
pub fn counterexample_search(property_id: &str, budget: &EnumerationBudget) -> Result<Option<Witness>> {
    let property: Property = property_id.parse()?;
    if property.is_bouquet_property() {
        search_bouquets(property, budget)
    } else {
        search_set_systems(property, budget)
    }
}

fn search_set_systems(property: Property, budget: &EnumerationBudget) -> Result<Option<Witness>> {
    let mut batches: Vec<Vec<SetSystem>> = Vec::new();
    for n in 1..=budget.max_ground_size {
        batches.push(vf_safe_delta_matroids(n)?);
    }
    if budget.sample_count > 0 {
        let n = budget.max_ground_size + 1;
        let samples: Vec<SetSystem> = sample_vf_safe(n, budget.sample_count, budget.seed)
            .into_par_iter()
            .filter(SetSystem::is_vf_safe)
            .collect();
        batches.push(samples);
    }
    for batch in batches {
        let found = batch.par_iter().find_map_first(|d| {
            check_set_system(property, d).map(|detail| Witness {
                property,
                instance: WitnessInstance::SetSystem(d.clone()),
                detail,
            })
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// `Some(detail)` iff `d` violates `property`.
fn check_set_system(property: Property, d: &SetSystem) -> Option<String> {
    let poly = |t| polynomial_of(d, t, DEFAULT_ENUMERATION_CAP).expect("small proper system");
    match property {
        Property::GapAtMostOne => Twuality::ALL.into_iter().find_map(|t| {
            let p = poly(t);
            let gap = p.gap_profile().expect("nonzero").max_gap;
            (gap > 1).then(|| format!("word {t}: {p} has a gap of size {gap}"))
        }),
        Property::Interpolating(t) => {
            let p = poly(t);
            (!p.gap_profile().expect("nonzero").is_interpolating).then(|| format!("word {t}: {p} is not interpolating"))
        }
        Property::LogConcave(t) => {
            let p = poly(t);
            (!p.is_log_concave()).then(|| format!("word {t}: {p} is not log-concave"))
        }
        Property::Table1 => (0..d.n()).find_map(|e| {
            let report = measure_table1(d, e);
            report.violations.first().map(|v| {
                format!(
                    "element {} of type {}: word {} changes width by {}, table says {}",
                    d.ground().elements()[e].name,
                    report.element_type,
                    v.op,
                    v.measured,
                    v.predicted
                )
            })
        }),
        Property::Monomial(t) => {
            let check = monomial_check(d, &t.word()).expect("vf-safe by construction");
            (!check.characterization_holds).then(|| {
                format!(
                    "word {t}: {} monomial={} but family test disagrees",
                    poly(t),
                    check.is_monomial
                )
            })
        }
        _ => unreachable!("bouquet property routed to set-system search"),
    }
}

fn search_bouquets(property: Property, budget: &EnumerationBudget) -> Result<Option<Witness>> {
    let mut batches: Vec<Vec<SignedChordDiagram>> = Vec::new();
    for m in 1..=budget.max_chords {
        batches.push(enumerate_signed_chord_diagrams(m)?);
    }
    if budget.sample_count > 0 {
        batches.push(sample_signed_chord_diagrams(
            budget.max_chords + 1,
            budget.sample_count,
            budget.seed,
        ));
    }
    for batch in batches {
        let found = if property == Property::GraphDeterminesPolynomial {
            check_graph_groups(&batch)
        } else {
            batch.par_iter().find_map_first(|b| {
                check_bouquet(property, b).map(|detail| Witness {
                    property,
                    instance: WitnessInstance::Bouquet(b.clone()),
                    detail,
                })
            })
        };
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn check_bouquet(property: Property, b: &SignedChordDiagram) -> Option<String> {
    let d = b.delta_matroid().expect("small bouquet");
    match property {
        Property::GenusWidth => {
            let (genus, width) = (b.euler_genus(), d.width().expect("normal"));
            (genus != width).then(|| format!("Euler genus {genus} but width {width}"))
        }
        Property::PetrialLoopComplement => all_subsets(b.m()).find_map(|a| {
            let lhs = b.petrial(a).delta_matroid().expect("small bouquet");
            (lhs != d.loop_complement(a)).then(|| format!("subset {}: Petrial gives {lhs}", b.labels().render(a)))
        }),
        Property::InterleavementGraph => match intersection_graph(&d) {
            Ok(g) if g == b.interleavement_graph() => None,
            Ok(g) => Some(format!("intersection graph differs:\n{g}")),
            Err(e) => Some(format!("intersection graph unavailable: {e}")),
        },
        _ => unreachable!("handled elsewhere"),
    }
}

/// Groups diagrams by interleavement graph and compares every member's
/// polynomials against the group's first member.
fn check_graph_groups(batch: &[SignedChordDiagram]) -> Option<Witness> {
    let mut groups: BTreeMap<(usize, Vec<u64>), Vec<&SignedChordDiagram>> = BTreeMap::new();
    for b in batch {
        let g = b.interleavement_graph();
        groups
            .entry((b.m(), g.adjacency().rows().to_vec()))
            .or_default()
            .push(b);
    }
    let words = RWord::twualities();
    let signature = |b: &SignedChordDiagram| {
        words
            .iter()
            .map(|w| b.twuality_polynomial(w).expect("small bouquet"))
            .collect::<Vec<_>>()
    };
    let witnesses: Vec<Witness> = groups
        .values()
        .filter_map(|members| {
            let reference = signature(members[0]);
            members[1..].iter().find_map(|other| {
                let theirs = signature(other);
                let bad = reference.iter().zip(&theirs).position(|(a, b)| a != b)?;
                Some(Witness {
                    property: Property::GraphDeterminesPolynomial,
                    instance: WitnessInstance::BouquetPair(members[0].clone(), (*other).clone()),
                    detail: format!(
                        "same interleavement graph, word {}: {} vs {}",
                        words[bad], reference[bad], theirs[bad]
                    ),
                })
            })
        })
        .collect();
    let position = |w: &Witness| match &w.instance {
        WitnessInstance::BouquetPair(_, b) => batch.iter().position(|x| x == b),
        _ => None,
    };
    witnesses.into_iter().min_by_key(position)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn property_ids_round_trip() {
        for p in Property::all() {
            assert_eq!(p.to_string().parse::<Property>().unwrap(), p);
        }
        assert!("interpolating-id".parse::<Property>().is_err());
        assert!("monomial-s".parse::<Property>().is_err());
        assert!(matches!("nope".parse::<Property>(), Err(Error::UnknownProperty(_))));
    }

    #[test]
    fn unknown_property_is_an_error() {
        assert!(counterexample_search("frobnicate", &EnumerationBudget::default()).is_err());
    }
}
