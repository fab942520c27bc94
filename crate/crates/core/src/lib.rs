//! Partial-twuality operations on set systems and delta-matroids.
//!
//! The crate covers twists and loop complementations and the `S3` action they
//! generate, width polynomials enumerated over all subsets, the p/u/t element
//! classification with its single-element width table, binary delta-matroids
//! from symmetric GF(2) matrices, and bouquets given as signed chord
//! diagrams. The [`oracle`] module holds exhaustive generators and
//! brute-force checks used by the test suites and the `check` command.

pub mod binary;
pub mod bouquet;
pub mod error;
pub mod format;
pub mod mask;
pub mod oracle;
pub mod poly;
pub mod setsystem;
pub mod types;
pub mod word;

pub use binary::{Gf2SymMatrix, LoopedSimpleGraph};
pub use bouquet::{RLetter, RWord, SignedChordDiagram};
pub use error::{Error, Result};
pub use mask::{Element, GroundSet, SubsetMask};
pub use poly::WidthPolynomial;
pub use setsystem::{Predicates, SetSystem, WidthStats};
pub use types::{ElementType, TypeLetter};
pub use word::{Letter, TwualWord, Twuality};
