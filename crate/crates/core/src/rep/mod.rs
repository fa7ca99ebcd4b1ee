//! The representations `pi_lambda` of the quotient algebra on the truncated
//! space spanned by `|k>`, `k in {0..K}^n`.
//!
//! For `i < n`, `y_i` lowers `k_i` with weight `q^{k_1+..+k_{i-1}} sqrt(1 - q^{2k_i})`;
//! `y_n` lowers `k_n` with `q^{k_1+..+k_{n-1}} sqrt(1 - q^{4k_n})`; `y_{n+1}` is
//! diagonal with eigenvalue `lambda q^{|k| + k_n}`. Adjoints raise with the
//! shifted weights. Raising past the cutoff `K` gives zero.

mod amplitude;
mod config;
mod matrix;
mod state;

pub use amplitude::{Amplitude, BasisWeight, ExactAmplitude, Phase};
pub use config::{FockIndex, GaussianRational, Lambda, Mode, RepConfig, LAMBDA_UNIT_TOL};
pub use matrix::{fmt_f64, matrix, top_generator, yn1_spectrum, SparseMatrix};
pub use state::{apply_element, apply_generator, basis_action, StateVector};

use thiserror::Error;

use crate::scalar::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("invalid representation parameters: {0}")]
    Config(String),
    #[error("generator {0} does not act in this representation")]
    ForeignGenerator(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Numeric state vector.
pub type NumericState = StateVector<num::complex::Complex64>;
/// Exact state vector.
pub type ExactState = StateVector<ExactAmplitude>;
