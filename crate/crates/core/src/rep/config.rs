use std::fmt;

use num::complex::Complex64;
use num::traits::{One, Signed, Zero};
use num::BigRational;
use serde::Serialize;

use super::RepError;
use crate::scalar::{parse_rational, rational_to_f64, BigRational as Q};

/// A Gaussian rational `re + i im`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

/// The phase of `pi(y_{n+1})`, exact when it is a Gaussian rational.
#[derive(Clone, Debug, PartialEq)]
pub enum Lambda {
    Exact(GaussianRational),
    Float(Complex64),
}

/// Tolerance on `|lambda| = 1` for floating phases.
pub const LAMBDA_UNIT_TOL: f64 = 1e-12;

impl Lambda {
    pub fn one() -> Self {
        Self::Exact(GaussianRational {
            re: Q::one(),
            im: Q::zero(),
        })
    }

    pub fn i() -> Self {
        Self::Exact(GaussianRational {
            re: Q::zero(),
            im: Q::one(),
        })
    }

    /// `exp(i theta)` as a floating phase.
    pub fn from_angle(theta: f64) -> Self {
        Self::Float(Complex64::from_polar(1.0, theta))
    }

    /// Accepts `1`, `-1`, `i`, `-i`, or `re,im` with rational or decimal parts.
    pub fn parse(s: &str) -> Result<Self, RepError> {
        let s = s.trim();
        let exact = |re: i64, im: i64| {
            Lambda::Exact(GaussianRational {
                re: Q::from_integer(re.into()),
                im: Q::from_integer(im.into()),
            })
        };
        let lam =
            match s {
                "1" => exact(1, 0),
                "-1" => exact(-1, 0),
                "i" => exact(0, 1),
                "-i" => exact(0, -1),
                _ => {
                    let (re, im) = s
                        .split_once(',')
                        .ok_or_else(|| RepError::Config(format!("cannot parse lambda {s:?}")))?;
                    match (parse_rational(re), parse_rational(im)) {
                        (Some(re), Some(im)) => Lambda::Exact(GaussianRational { re, im }),
                        _ => {
                            let re: f64 = re.trim().parse().map_err(|_| {
                                RepError::Config(format!("cannot parse lambda {s:?}"))
                            })?;
                            let im: f64 = im.trim().parse().map_err(|_| {
                                RepError::Config(format!("cannot parse lambda {s:?}"))
                            })?;
                            Lambda::Float(Complex64::new(re, im))
                        }
                    }
                }
            };
        lam.check_unit()?;
        Ok(lam)
    }

    fn check_unit(&self) -> Result<(), RepError> {
        let ok = match self {
            Lambda::Exact(g) => g.norm_sqr().is_one(),
            Lambda::Float(z) => (z.norm() - 1.0).abs() <= LAMBDA_UNIT_TOL,
        };
        if ok {
            Ok(())
        } else {
            Err(RepError::Config(format!("|lambda| must be 1, got {self}")))
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Lambda::Exact(g) => g.to_complex(),
            Lambda::Float(z) => *z,
        }
    }

    pub fn as_exact(&self) -> Option<&GaussianRational> {
        match self {
            Lambda::Exact(g) => Some(g),
            Lambda::Float(_) => None,
        }
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lambda::Exact(g) => {
                if g.im.is_zero() {
                    write!(f, "{}", g.re)
                } else if g.re.is_zero() && g.im.abs().is_one() {
                    f.write_str(if g.im.is_positive() { "i" } else { "-i" })
                } else {
                    write!(f, "{},{}", g.re, g.im)
                }
            }
            Lambda::Float(z) => write!(f, "{},{}", z.re, z.im),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Numeric,
    Exact,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Numeric => "numeric",
            Mode::Exact => "exact",
        })
    }
}

/// A multi-index `k = (k_1, .., k_n)` labelling the basis vector `|k>`.
///
/// The derived order is lexicographic with `k_1` most significant, which is
/// also the rank order of basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FockIndex(Vec<u32>);

impl FockIndex {
    pub fn new(k: Vec<u32>) -> Self {
        Self(k)
    }

    pub fn zero(n: u32) -> Self {
        Self(vec![0; n as usize])
    }

    pub fn components(&self) -> &[u32] {
        &self.0
    }

    /// `k_i` for 1-based `i`.
    pub fn get(&self, i: u32) -> u32 {
        self.0[(i - 1) as usize]
    }

    /// `|k| = k_1 + .. + k_n`.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `k_1 + .. + k_{i-1}`.
    pub fn prefix(&self, i: u32) -> u32 {
        self.0[..(i - 1) as usize].iter().sum()
    }

    pub(crate) fn shifted(&self, i: u32, up: bool) -> Self {
        let mut k = self.0.clone();
        let slot = &mut k[(i - 1) as usize];
        *slot = if up { *slot + 1 } else { *slot - 1 };
        Self(k)
    }
}

impl fmt::Display for FockIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("|")?;
        for (j, k) in self.0.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str(">")
    }
}

/// Truncation and deformation parameters of the representation `pi_lambda`.
#[derive(Clone, Debug)]
pub struct RepConfig {
    n: u32,
    q0: BigRational,
    lambda: Lambda,
    cutoff: u32,
    mode: Mode,
    q0_f64: f64,
    lambda_c: Complex64,
    q_pows: Vec<f64>,
    atoms: Vec<f64>,
}

impl RepConfig {
    pub fn new(
        n: u32,
        q0: BigRational,
        lambda: Lambda,
        cutoff: u32,
        mode: Mode,
    ) -> Result<Self, RepError> {
        if n < 1 {
            return Err(RepError::Config(format!("n must be at least 1, got {n}")));
        }
        if !(q0.is_positive() && q0 < Q::one()) {
            return Err(RepError::Config(format!("q0 = {q0} is outside (0, 1)")));
        }
        lambda.check_unit()?;
        if mode == Mode::Exact && lambda.as_exact().is_none() {
            return Err(RepError::Config(
                "exact mode needs a Gaussian-rational lambda".into(),
            ));
        }
        // Largest q-power is |k| + k_n <= (n + 1) K; atoms go up to 4K + 4.
        let max_pow = ((n + 1) * cutoff + 4) as usize;
        let q_pows: Vec<f64> = (0..=max_pow)
            .map(|e| rational_to_f64(&num::traits::Pow::pow(&q0, e as u32)))
            .collect();
        let atoms: Vec<f64> = (0..=(4 * cutoff + 4) as usize)
            .map(|s| {
                let v = Q::one() - num::traits::Pow::pow(&q0, s as u32);
                rational_to_f64(&v).sqrt()
            })
            .collect();
        Ok(Self {
            n,
            q0_f64: rational_to_f64(&q0),
            lambda_c: lambda.to_complex(),
            q0,
            lambda,
            cutoff,
            mode,
            q_pows,
            atoms,
        })
    }

    /// Numeric-mode configuration with `lambda = 1`.
    pub fn numeric(n: u32, q0: BigRational, cutoff: u32) -> Result<Self, RepError> {
        Self::new(n, q0, Lambda::one(), cutoff, Mode::Numeric)
    }

    pub fn with_mode(&self, mode: Mode) -> Result<Self, RepError> {
        Self::new(
            self.n,
            self.q0.clone(),
            self.lambda.clone(),
            self.cutoff,
            mode,
        )
    }

    pub fn with_q0(&self, q0: BigRational) -> Result<Self, RepError> {
        Self::new(self.n, q0, self.lambda.clone(), self.cutoff, self.mode)
    }

    pub fn with_lambda(&self, lambda: Lambda) -> Result<Self, RepError> {
        Self::new(self.n, self.q0.clone(), lambda, self.cutoff, self.mode)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q0(&self) -> &BigRational {
        &self.q0
    }

    pub fn q0_f64(&self) -> f64 {
        self.q0_f64
    }

    pub fn lambda(&self) -> &Lambda {
        &self.lambda
    }

    pub fn lambda_complex(&self) -> Complex64 {
        self.lambda_c
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// `(K + 1)^n`.
    pub fn dim(&self) -> usize {
        ((self.cutoff + 1) as usize).pow(self.n)
    }

    pub fn rank(&self, k: &FockIndex) -> usize {
        let base = (self.cutoff + 1) as usize;
        k.0.iter().fold(0, |acc, &ki| acc * base + ki as usize)
    }

    pub fn index_of_rank(&self, mut rank: usize) -> FockIndex {
        let base = (self.cutoff + 1) as usize;
        let mut k = vec![0u32; self.n as usize];
        for slot in k.iter_mut().rev() {
            *slot = (rank % base) as u32;
            rank /= base;
        }
        FockIndex(k)
    }

    /// All truncated indices in rank order.
    pub fn indices(&self) -> impl Iterator<Item = FockIndex> + '_ {
        (0..self.dim()).map(|r| self.index_of_rank(r))
    }

    pub fn contains(&self, k: &FockIndex) -> bool {
        k.0.len() == self.n as usize && k.0.iter().all(|&ki| ki <= self.cutoff)
    }

    /// True when every component leaves room for `margin` raising steps.
    pub fn is_interior(&self, k: &FockIndex, margin: u32) -> bool {
        k.0.iter().all(|&ki| ki + margin <= self.cutoff)
    }

    pub(crate) fn q_pow_f64(&self, e: u32) -> f64 {
        self.q_pows
            .get(e as usize)
            .copied()
            .unwrap_or_else(|| self.q0_f64.powi(e as i32))
    }

    /// `sqrt(1 - q0^s)`.
    pub(crate) fn atom_f64(&self, s: u32) -> f64 {
        self.atoms.get(s as usize).copied().unwrap_or_else(|| {
            let v = Q::one() - num::traits::Pow::pow(&self.q0, s);
            rational_to_f64(&v).sqrt()
        })
    }
}
