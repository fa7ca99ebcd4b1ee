//! Mechanical checks of the algebraic and operator identities.
//!
//! Symbolic checks normalize `lhs - rhs` and demand the zero element.
//! Representation checks act on basis vectors of a truncation; identities of
//! word length `d` are only tested on indices with every `k_i <= K - d`, since
//! raising past the cutoff annihilates vectors and breaks them at the edge.
//! Exact-mode zeros are cross-checked numerically at [`GUARD_Q0`].

mod operators;
mod report;
mod represented;
mod symbolic;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::{AlgebraError, Kind, Presentation, DEFAULT_FUEL};
use crate::rep::{RepConfig, RepError};

pub use operators::{
    check_kernel, check_lemma_main, check_lowest_weight_basis, check_spectrum, joint_kernel_dims,
    KERNEL_TOL,
};
pub use report::{CheckParams, CheckReport, Witness};
pub use represented::check_relations_in_rep;
pub use symbolic::{
    check_lemma_aux, check_lemma_aux_with_fuel, check_symbolic_relations,
    check_symbolic_relations_with_fuel, lemma_aux_relation,
};

/// Tolerance for double-precision residuals of polynomial identities.
pub const NUMERIC_TOL: f64 = 1e-12;
/// Tolerance for identities that pass through a matrix square root.
pub const SQRT_TOL: f64 = 1e-8;
/// Rational points at which exact zeros are re-evaluated numerically.
pub const GUARD_Q0: [(i64, i64); 3] = [(1, 3), (1, 2), (3, 5)];

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("{0}")]
    Precondition(String),
    /// The truncation is too small for the requested check.
    #[error("configuration error: {0}")]
    Config(String),
}

/// Groups of checks selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Relations,
    LemmaAux,
    LemmaMain,
    Kernel,
    Basis,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "all" => Suite::All,
            "relations" => Suite::Relations,
            "lemma-aux" => Suite::LemmaAux,
            "lemma-main" => Suite::LemmaMain,
            "kernel" => Suite::Kernel,
            "basis" => Suite::Basis,
            other => return Err(format!("unknown suite {other}")),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::All => "all",
            Suite::Relations => "relations",
            Suite::LemmaAux => "lemma-aux",
            Suite::LemmaMain => "lemma-main",
            Suite::Kernel => "kernel",
            Suite::Basis => "basis",
        })
    }
}

/// Highest power used by the lemma-aux suite.
pub const LEMMA_AUX_M_MAX: u32 = 5;

/// Runs a suite against the presentation `p` and the truncation `c`.
///
/// Representation checks run on the quotient algebra with the same `n`,
/// because the truncated representations belong to the quotient. For `S` the relation suite also checks that every
/// relation maps to zero under the quotient map.
pub fn run_suite(
    suite: Suite,
    p: &Presentation,
    c: &RepConfig,
    fuel: u64,
) -> Result<Vec<CheckReport>, VerifyError> {
    if p.n() != c.n() {
        return Err(VerifyError::Precondition(format!(
            "presentation has n = {} but the representation has n = {}",
            p.n(),
            c.n()
        )));
    }
    let quotient = match (p.kind(), p.sphere_reduction()) {
        (Kind::Sigma, true) => p.clone(),
        _ => Presentation::new(Kind::Sigma, p.n(), true)?,
    };
    let wants = |s: Suite| suite == Suite::All || suite == s;
    let mut out = Vec::new();
    if wants(Suite::Relations) {
        out.push(check_symbolic_relations_with_fuel(p, fuel)?);
        out.push(check_relations_in_rep(c, &quotient)?);
    }
    if wants(Suite::LemmaAux) {
        out.push(check_lemma_aux_with_fuel(&quotient, LEMMA_AUX_M_MAX, fuel)?);
    }
    if wants(Suite::LemmaMain) {
        for k in 1..=c.n() {
            out.push(check_lemma_main(c, k)?);
        }
    }
    if wants(Suite::Kernel) {
        out.push(check_kernel(c)?);
    }
    if wants(Suite::Basis) {
        out.push(check_lowest_weight_basis(c)?);
    }
    Ok(out)
}

/// [`run_suite`] with the default rewrite fuel.
pub fn run_suite_default(
    suite: Suite,
    p: &Presentation,
    c: &RepConfig,
) -> Result<Vec<CheckReport>, VerifyError> {
    run_suite(suite, p, c, DEFAULT_FUEL)
}

#[cfg(test)]
mod tests;
