use std::collections::BTreeMap;
use std::fmt;

use num::complex::Complex64;

use super::{Amplitude, BasisWeight, FockIndex, Phase, RepConfig, RepError};
use crate::algebra::{Element, Family, Generator};

/// A finitely supported vector in the truncated space.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<A = Complex64> {
    amplitudes: BTreeMap<FockIndex, A>,
}

impl<A: Amplitude> Default for StateVector<A> {
    fn default() -> Self {
        Self {
            amplitudes: BTreeMap::new(),
        }
    }
}

impl<A: Amplitude> StateVector<A> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `|k>` with unit amplitude.
    pub fn basis(k: FockIndex, cfg: &RepConfig) -> Self {
        let one = A::weight(
            &BasisWeight {
                q_pow: 0,
                radical: None,
                phase: Phase::One,
            },
            cfg,
        );
        let mut v = Self::zero();
        v.add(k, &one);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn amplitude(&self, k: &FockIndex) -> A {
        self.amplitudes.get(k).cloned().unwrap_or_else(A::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FockIndex, &A)> {
        self.amplitudes.iter()
    }

    pub fn add(&mut self, k: FockIndex, a: &A) {
        if a.is_zero() {
            return;
        }
        let slot = self.amplitudes.entry(k.clone()).or_insert_with(A::zero);
        slot.add_assign(a);
        if slot.is_zero() {
            self.amplitudes.remove(&k);
        }
    }

    pub fn add_state(&mut self, other: &Self) {
        for (k, a) in &other.amplitudes {
            self.add(k.clone(), a);
        }
    }

    pub fn sub_state(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, a) in &other.amplitudes {
            out.add(k.clone(), &A::zero().sub(a));
        }
        out
    }

    pub fn scale(&self, c: &A) -> Self {
        let mut out = Self::zero();
        for (k, a) in &self.amplitudes {
            out.add(k.clone(), &a.mul(c));
        }
        out
    }

    /// Largest amplitude magnitude at the configuration's `q0`.
    pub fn max_magnitude(&self, cfg: &RepConfig) -> f64 {
        self.amplitudes
            .values()
            .map(|a| a.magnitude(cfg))
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for StateVector<Complex64> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (j, (k, a)) in self.amplitudes.iter().enumerate() {
            if j > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({:.16e}{:+.16e}i){k}", a.re, a.im)?;
        }
        Ok(())
    }
}

impl fmt::Display for StateVector<super::ExactAmplitude> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (j, (k, a)) in self.amplitudes.iter().enumerate() {
            if j > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({a}){k}")?;
        }
        Ok(())
    }
}

fn check_generator(g: Generator, cfg: &RepConfig) -> Result<(), RepError> {
    if g.family == Family::Y && (1..=cfg.n() + 1).contains(&g.index) {
        Ok(())
    } else {
        Err(RepError::ForeignGenerator(format!(
            "{g} (valid: y1..y{})",
            cfg.n() + 1
        )))
    }
}

/// Image of `|k>` under `g`: the target index and weight, or `None` when the
/// result vanishes (lowering from `k_i = 0`, or raising past the cutoff).
pub fn basis_action(
    g: Generator,
    k: &FockIndex,
    cfg: &RepConfig,
) -> Result<Option<(FockIndex, BasisWeight)>, RepError> {
    check_generator(g, cfg)?;
    let n = cfg.n();
    let i = g.index;
    if i == n + 1 {
        let phase = if g.starred {
            Phase::LambdaConj
        } else {
            Phase::Lambda
        };
        let w = BasisWeight {
            q_pow: k.total() + k.get(n),
            radical: None,
            phase,
        };
        return Ok(Some((k.clone(), w)));
    }
    let ki = k.get(i);
    let stride = if i == n { 4 } else { 2 };
    let q_pow = k.prefix(i);
    if g.starred {
        if ki + 1 > cfg.cutoff() {
            return Ok(None);
        }
        let w = BasisWeight {
            q_pow,
            radical: Some(stride * (ki + 1)),
            phase: Phase::One,
        };
        Ok(Some((k.shifted(i, true), w)))
    } else {
        if ki == 0 {
            return Ok(None);
        }
        let w = BasisWeight {
            q_pow,
            radical: Some(stride * ki),
            phase: Phase::One,
        };
        Ok(Some((k.shifted(i, false), w)))
    }
}

pub fn apply_generator<A: Amplitude>(
    g: Generator,
    v: &StateVector<A>,
    cfg: &RepConfig,
) -> Result<StateVector<A>, RepError> {
    check_generator(g, cfg)?;
    let mut out = StateVector::zero();
    for (k, a) in v.iter() {
        if let Some((target, w)) = basis_action(g, k, cfg)? {
            out.add(target, &a.mul(&A::weight(&w, cfg)));
        }
    }
    Ok(out)
}

/// Action of an element: each word acts right to left, and coefficients are
/// evaluated at `q0` (numeric) or kept symbolic (exact).
pub fn apply_element<A: Amplitude>(
    e: &Element,
    v: &StateVector<A>,
    cfg: &RepConfig,
) -> Result<StateVector<A>, RepError> {
    for g in e.generators() {
        check_generator(g, cfg)?;
    }
    let mut out = StateVector::zero();
    for (word, c) in e.terms() {
        let mut w = v.clone();
        for &g in word.letters().iter().rev() {
            if w.is_zero() {
                break;
            }
            w = apply_generator(g, &w, cfg)?;
        }
        if w.is_zero() {
            continue;
        }
        out.add_state(&w.scale(&A::from_laurent(c, cfg)?));
    }
    Ok(out)
}
