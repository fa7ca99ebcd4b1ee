//! Words, elements and oriented rewrite systems for the two sphere algebras.

mod element;
mod normalize;
mod presentation;
mod probe;
mod quotient;

pub use element::{Element, Family, Generator, Word};
pub use normalize::{is_normal_form, normalize, normalize_counted, DEFAULT_FUEL};
pub use presentation::{Kind, Presentation, Relation, Rule};
pub use probe::{confluence_probe, random_word, Discrepancy, ProbeReport, PROBE_FUEL};
pub use quotient::quotient_map;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0}")]
    Domain(String),
    #[error("generator {0} is not part of this presentation")]
    ForeignGenerator(String),
    #[error("cannot orient relation: {0}")]
    Orientation(String),
    #[error("conflicting rules: {0}")]
    ConflictingRules(String),
    #[error("no rule for out-of-order pair {0}")]
    MissingRule(String),
    #[error("rule does not decrease in the word order: {0}")]
    NonDecreasingRule(String),
    #[error("rewrite fuel exhausted after {steps} steps while reducing {word}")]
    FuelExhausted { steps: u64, word: String },
}
