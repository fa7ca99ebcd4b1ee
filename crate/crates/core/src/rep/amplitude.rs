use num::complex::Complex64;

use super::{GaussianRational, RepConfig};
use crate::scalar::{
    radical_canonicalize, BigRational, LaurentPoly, RadicalScalar, RadicalSum, ScalarError,
};

/// Phase picked up by a basis action.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phase {
    One,
    Lambda,
    LambdaConj,
}

/// `phase * q^q_pow * sqrt(1 - q^radical)`: the coefficient of a single
/// generator acting on a basis vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisWeight {
    pub q_pow: u32,
    pub radical: Option<u32>,
    pub phase: Phase,
}

/// Scalar type of state vectors: complex doubles or exact radical sums.
pub trait Amplitude: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn from_laurent(c: &LaurentPoly, cfg: &RepConfig) -> Result<Self, ScalarError>;
    fn weight(w: &BasisWeight, cfg: &RepConfig) -> Self;
    /// Magnitude at the configuration's `q0`.
    fn magnitude(&self, cfg: &RepConfig) -> f64;
}

impl Amplitude for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn from_laurent(c: &LaurentPoly, cfg: &RepConfig) -> Result<Self, ScalarError> {
        Ok(Complex64::new(c.eval(cfg.q0())?, 0.0))
    }

    fn weight(w: &BasisWeight, cfg: &RepConfig) -> Self {
        let mut mag = cfg.q_pow_f64(w.q_pow);
        if let Some(s) = w.radical {
            mag *= cfg.atom_f64(s);
        }
        match w.phase {
            Phase::One => Complex64::new(mag, 0.0),
            Phase::Lambda => cfg.lambda_complex() * mag,
            Phase::LambdaConj => cfg.lambda_complex().conj() * mag,
        }
    }

    fn magnitude(&self, _cfg: &RepConfig) -> f64 {
        self.norm()
    }
}

/// `re + i im` with both parts exact radical sums in `q`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExactAmplitude {
    pub re: RadicalSum,
    pub im: RadicalSum,
}

impl ExactAmplitude {
    pub fn real(re: RadicalSum) -> Self {
        Self {
            re,
            im: RadicalSum::zero(),
        }
    }

    fn times_gaussian(&self, g: &GaussianRational) -> Self {
        let (a, b) = (&g.re, &g.im);
        Self {
            re: &self.re.scale_rational(a) - &self.im.scale_rational(b),
            im: &self.re.scale_rational(b) + &self.im.scale_rational(a),
        }
    }

    /// Numeric value at an arbitrary `q0`, with `lambda` already folded in.
    pub fn eval(&self, q0: &BigRational) -> Result<Complex64, ScalarError> {
        Ok(Complex64::new(self.re.eval(q0)?, self.im.eval(q0)?))
    }
}

impl Amplitude for ExactAmplitude {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn add_assign(&mut self, other: &Self) {
        self.re = &self.re + &other.re;
        self.im = &self.im + &other.im;
    }

    fn sub(&self, other: &Self) -> Self {
        Self {
            re: &self.re - &other.re,
            im: &self.im - &other.im,
        }
    }

    fn mul(&self, other: &Self) -> Self {
        Self {
            re: &(&self.re * &other.re) - &(&self.im * &other.im),
            im: &(&self.re * &other.im) + &(&self.im * &other.re),
        }
    }

    fn from_laurent(c: &LaurentPoly, _cfg: &RepConfig) -> Result<Self, ScalarError> {
        Ok(Self::real(RadicalSum::from(c.clone())))
    }

    fn weight(w: &BasisWeight, cfg: &RepConfig) -> Self {
        let mono = LaurentPoly::q_pow(w.q_pow as i32);
        let r = match w.radical {
            Some(s) => radical_canonicalize(&[s]).scale(&mono),
            None => RadicalScalar::from_poly(mono),
        };
        let base = Self::real(RadicalSum::from(r));
        let lam = cfg
            .lambda()
            .as_exact()
            .expect("exact amplitudes need a Gaussian-rational lambda");
        match w.phase {
            Phase::One => base,
            Phase::Lambda => base.times_gaussian(lam),
            Phase::LambdaConj => base.times_gaussian(&lam.conj()),
        }
    }

    fn magnitude(&self, cfg: &RepConfig) -> f64 {
        self.eval(cfg.q0()).map(|z| z.norm()).unwrap_or(f64::NAN)
    }
}

impl std::fmt::Display for ExactAmplitude {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "i*[{}]", self.im)
        } else {
            write!(f, "[{}] + i*[{}]", self.re, self.im)
        }
    }
}
