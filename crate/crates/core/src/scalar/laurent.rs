use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::traits::{One, Pow, Signed, ToPrimitive, Zero};
use num::{BigInt, BigRational};

use super::ScalarError;

/// A Laurent polynomial in `q` with rational coefficients.
///
/// Terms are kept in a map from exponent to coefficient; zero coefficients
/// are never stored, so structural equality is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q^exp`, for any integer exponent.
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(BigRational::one(), exp)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(c: BigRational, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, integer coefficient)` pairs.
    pub fn from_int_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, BigRational::from_integer(BigInt::from(c)));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: i32) -> BigRational {
        self.terms
            .get(&exp)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiplies by `q^shift`.
    pub fn shift(&self, shift: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e + shift, v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Returns `(c, e)` when the polynomial is the single monomial `c q^e`.
    pub fn as_monomial(&self) -> Option<(&BigRational, i32)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    /// Multiplicative inverse, which exists in the Laurent ring only for monomials.
    pub fn inverse(&self) -> Option<Self> {
        let (c, e) = self.as_monomial()?;
        Some(Self::monomial(c.recip(), -e))
    }

    /// Exact division. Returns `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d_lo = divisor.min_exp().unwrap();
        let d_hi = divisor.max_exp().unwrap();
        let lead = divisor.terms[&d_hi].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        // Long division from the top; the remainder's span must shrink below
        // the divisor's span or the division is not exact.
        while let Some(r_hi) = rem.max_exp() {
            let r_lo = rem.min_exp().unwrap();
            if r_hi - r_lo < d_hi - d_lo {
                return None;
            }
            let c = &rem.terms[&r_hi] / &lead;
            let step = Self::monomial(c, r_hi - d_hi);
            rem -= &(&step * divisor);
            quot += &step;
        }
        Some(quot)
    }

    /// Exact value at a rational point `q0` in `(0, 1)`.
    pub fn eval_exact(&self, q0: &BigRational) -> Result<BigRational, ScalarError> {
        check_q0(q0)?;
        let inv = q0.recip();
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let base = if *e >= 0 { q0 } else { &inv };
            acc += c * Pow::pow(base, e.unsigned_abs());
        }
        Ok(acc)
    }

    pub fn eval(&self, q0: &BigRational) -> Result<f64, ScalarError> {
        Ok(rational_to_f64(&self.eval_exact(q0)?))
    }
}

pub(crate) fn check_q0(q0: &BigRational) -> Result<(), ScalarError> {
    if q0.is_positive() && *q0 < BigRational::one() {
        Ok(())
    } else {
        Err(ScalarError::OutOfRange(q0.to_string()))
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn fmt_term(exp: i32, c: &BigRational) -> String {
    if exp == 0 {
        return fmt_rational(c);
    }
    let mono = if exp == 1 {
        "q".to_string()
    } else {
        format!("q^{exp}")
    };
    if c.is_one() {
        mono
    } else if (-c).is_one() {
        format!("-{mono}")
    } else {
        format!("{}*{mono}", fmt_rational(c))
    }
}

/// Canonical text: ascending exponents, e.g. `-q^-1 + 1 + 3/2*q^2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let t = fmt_term(*e, c);
            if i == 0 {
                f.write_str(&t)?;
            } else if let Some(rest) = t.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {t}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = crate::expr::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::expr::parse_laurent(s)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<BigRational> for LaurentPoly {
    fn from(c: BigRational) -> Self {
        Self::constant(c)
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// The q-shifted factorial `(a; b)_ell = prod_{i=0}^{ell-1} (1 - a b^i)`.
pub fn qpochhammer(a: &LaurentPoly, b: &LaurentPoly, ell: u32) -> LaurentPoly {
    let one = LaurentPoly::one();
    let mut acc = LaurentPoly::one();
    let mut b_pow = LaurentPoly::one();
    for _ in 0..ell {
        acc = &acc * &(&one - &(a * &b_pow));
        b_pow = &b_pow * b;
    }
    acc
}
