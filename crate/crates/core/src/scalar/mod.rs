//! Exact scalars: Laurent polynomials in `q`, q-shifted factorials and
//! square roots of products of `1 - q^s` factors.

mod laurent;
mod radical;

pub use laurent::{qpochhammer, rational_to_f64, LaurentPoly};
pub use radical::{cyclotomic, radical_canonicalize, root_factor, RadicalScalar, RadicalSum};

pub use num::BigRational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("q0 = {0} is outside the open interval (0, 1)")]
    OutOfRange(String),
    #[error("not an exact rational: {0:?}")]
    NotRational(String),
}

/// Parses a rational literal such as `1/2` or `3`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: num::BigInt = n.parse().ok()?;
    let d: num::BigInt = d.parse().ok()?;
    if d == num::BigInt::from(0) {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// `q0` as an exact rational, validated to lie in `(0, 1)`.
pub fn parse_q0(s: &str) -> Result<BigRational, ScalarError> {
    let q0 = parse_rational(s).ok_or_else(|| ScalarError::NotRational(s.to_string()))?;
    laurent::check_q0(&q0)?;
    Ok(q0)
}
