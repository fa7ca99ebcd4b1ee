use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num::BigRational;

use super::laurent::{check_q0, rational_to_f64};
use super::{LaurentPoly, ScalarError};

/// The `d`-th cyclotomic polynomial, via `Phi_d = (q^d - 1) / prod_{e | d, e < d} Phi_e`.
pub fn cyclotomic(d: u32) -> LaurentPoly {
    assert!(d >= 1, "cyclotomic index must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u32, LaurentPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&d) {
        return p.clone();
    }
    let mut p = LaurentPoly::from_int_terms([(d as i32, 1), (0, -1)]);
    for e in divisors(d).into_iter().filter(|&e| e < d) {
        p = p
            .div_exact(&cyclotomic(e))
            .expect("cyclotomic factors divide q^d - 1");
    }
    cache.lock().unwrap().insert(d, p.clone());
    p
}

/// The factor keyed by `d` under a square root: `1 - q` for `d = 1`, `Phi_d` otherwise.
///
/// Every factor is positive on `(0, 1)` and `1 - q^s` is the product of
/// `root_factor(d)` over the divisors `d` of `s`.
pub fn root_factor(d: u32) -> LaurentPoly {
    if d == 1 {
        LaurentPoly::from_int_terms([(0, 1), (1, -1)])
    } else {
        cyclotomic(d)
    }
}

pub(crate) fn divisors(s: u32) -> Vec<u32> {
    (1..=s).filter(|d| s.is_multiple_of(*d)).collect()
}

/// `poly * sqrt(prod_{d in root} root_factor(d))` with a square-free root set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RadicalScalar {
    poly: LaurentPoly,
    root: BTreeSet<u32>,
}

impl RadicalScalar {
    pub fn from_poly(poly: LaurentPoly) -> Self {
        Self {
            poly,
            root: BTreeSet::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    /// Canonical form of `poly * sqrt(prod_d root_factor(d)^{m_d})` where the
    /// multiplicities `m_d` come from `factors` (repeated indices allowed).
    pub fn from_parts<I: IntoIterator<Item = u32>>(poly: LaurentPoly, factors: I) -> Self {
        let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
        for d in factors {
            *counts.entry(d).or_default() += 1;
        }
        let mut poly = poly;
        let mut root = BTreeSet::new();
        for (d, m) in counts {
            if m >= 2 {
                poly = &poly * &root_factor(d).pow(m / 2);
            }
            if m % 2 == 1 {
                root.insert(d);
            }
        }
        if poly.is_zero() {
            root.clear();
        }
        Self { poly, root }
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn root(&self) -> &BTreeSet<u32> {
        &self.root
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// The polynomial under the square root.
    pub fn radicand(&self) -> LaurentPoly {
        self.root
            .iter()
            .fold(LaurentPoly::one(), |acc, d| &acc * &root_factor(*d))
    }

    /// `self^2`, always a plain Laurent polynomial.
    pub fn square(&self) -> LaurentPoly {
        &(&self.poly * &self.poly) * &self.radicand()
    }

    pub fn scale(&self, p: &LaurentPoly) -> Self {
        Self::from_parts(&self.poly * p, self.root.iter().copied())
    }

    /// Exact value of `self^2` at `q0`, computed from the parts.
    pub fn eval_squared_exact(&self, q0: &BigRational) -> Result<BigRational, ScalarError> {
        let p = self.poly.eval_exact(q0)?;
        let mut acc = &p * &p;
        for d in &self.root {
            acc *= root_factor(*d).eval_exact(q0)?;
        }
        Ok(acc)
    }

    /// Numeric value, taking the nonnegative square root.
    pub fn eval(&self, q0: &BigRational) -> Result<f64, ScalarError> {
        check_q0(q0)?;
        let p = self.poly.eval(q0)?;
        if self.root.is_empty() {
            return Ok(p);
        }
        let rad = self.radicand().eval_exact(q0)?;
        Ok(p * rational_to_f64(&rad).sqrt())
    }
}

impl Mul<&RadicalScalar> for &RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: &RadicalScalar) -> RadicalScalar {
        RadicalScalar::from_parts(
            &self.poly * &rhs.poly,
            self.root.iter().chain(rhs.root.iter()).copied(),
        )
    }
}

/// Canonical form of `prod_s sqrt(1 - q^s)` over the given exponents.
pub fn radical_canonicalize(exponents: &[u32]) -> RadicalScalar {
    assert!(
        exponents.iter().all(|&s| s >= 1),
        "radical atoms need s >= 1"
    );
    RadicalScalar::from_parts(
        LaurentPoly::one(),
        exponents.iter().flat_map(|&s| divisors(s)),
    )
}

/// A finite sum of radical scalars, grouped by root signature.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RadicalSum {
    terms: BTreeMap<BTreeSet<u32>, LaurentPoly>,
}

impl RadicalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = RadicalScalar> + '_ {
        self.terms.iter().map(|(root, poly)| RadicalScalar {
            poly: poly.clone(),
            root: root.clone(),
        })
    }

    pub fn add_scalar(&mut self, r: &RadicalScalar) {
        if r.is_zero() {
            return;
        }
        let slot = self.terms.entry(r.root.clone()).or_default();
        *slot += &r.poly;
        if slot.is_zero() {
            self.terms.remove(&r.root);
        }
    }

    pub fn mul_scalar(&self, r: &RadicalScalar) -> Self {
        let mut out = Self::zero();
        for t in self.terms() {
            out.add_scalar(&(&t * r));
        }
        out
    }

    pub fn scale(&self, p: &LaurentPoly) -> Self {
        self.mul_scalar(&RadicalScalar::from_poly(p.clone()))
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (root, poly) in &self.terms {
            let p = poly.scale(c);
            if !p.is_zero() {
                out.terms.insert(root.clone(), p);
            }
        }
        out
    }

    pub fn eval(&self, q0: &BigRational) -> Result<f64, ScalarError> {
        let mut acc = 0.0;
        for t in self.terms() {
            acc += t.eval(q0)?;
        }
        Ok(acc)
    }
}

impl From<LaurentPoly> for RadicalSum {
    fn from(p: LaurentPoly) -> Self {
        Self::from(RadicalScalar::from_poly(p))
    }
}

impl From<RadicalScalar> for RadicalSum {
    fn from(r: RadicalScalar) -> Self {
        let mut s = Self::zero();
        s.add_scalar(&r);
        s
    }
}

impl Add<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn add(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        for t in rhs.terms() {
            out.add_scalar(&t);
        }
        out
    }
}

impl Neg for &RadicalSum {
    type Output = RadicalSum;
    fn neg(self) -> RadicalSum {
        RadicalSum {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl Sub<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn sub(self, rhs: &RadicalSum) -> RadicalSum {
        self + &(-rhs)
    }
}

impl Mul<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn mul(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = RadicalSum::zero();
        for a in self.terms() {
            for b in rhs.terms() {
                out.add_scalar(&(&a * &b));
            }
        }
        out
    }
}

impl std::fmt::Display for RadicalScalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.root.is_empty() {
            write!(f, "{}", self.poly)
        } else if self.poly.is_one() {
            write!(f, "sqrt({})", self.radicand())
        } else {
            write!(f, "({})*sqrt({})", self.poly, self.radicand())
        }
    }
}

impl std::fmt::Display for RadicalSum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(
            cyclotomic(1),
            LaurentPoly::from_int_terms([(1, 1), (0, -1)])
        );
        assert_eq!(cyclotomic(2), LaurentPoly::from_int_terms([(1, 1), (0, 1)]));
        assert_eq!(cyclotomic(4), LaurentPoly::from_int_terms([(2, 1), (0, 1)]));
        assert_eq!(
            cyclotomic(6),
            LaurentPoly::from_int_terms([(2, 1), (1, -1), (0, 1)])
        );
        assert_eq!(
            cyclotomic(12),
            LaurentPoly::from_int_terms([(4, 1), (2, -1), (0, 1)])
        );
    }

    #[test]
    fn atoms_multiply_to_one_minus_q_power() {
        for s in 1..=24 {
            let prod = divisors(s)
                .into_iter()
                .fold(LaurentPoly::one(), |acc, d| &acc * &root_factor(d));
            assert_eq!(
                prod,
                LaurentPoly::from_int_terms([(0, 1), (s as i32, -1)]),
                "s = {s}"
            );
        }
    }

    #[test]
    fn square_of_an_atom_is_plain() {
        let got = radical_canonicalize(&[2, 2]);
        assert_eq!(got.poly(), &LaurentPoly::from_int_terms([(0, 1), (2, -1)]));
        assert!(got.root().is_empty());
    }

    #[test]
    fn shared_factors_fold_out() {
        let got = radical_canonicalize(&[2, 4]);
        assert_eq!(got.poly(), &LaurentPoly::from_int_terms([(0, 1), (2, -1)]));
        assert_eq!(got.root(), &BTreeSet::from([4]));
        // squaring the claimed form gives back (1 - q^2)(1 - q^4)
        let expected = &LaurentPoly::from_int_terms([(0, 1), (2, -1)])
            * &LaurentPoly::from_int_terms([(0, 1), (4, -1)]);
        assert_eq!(got.square(), expected);
    }

    #[test]
    fn single_atom_matches_numeric_root() {
        let got = radical_canonicalize(&[4]);
        assert!(got.poly().is_one());
        assert_eq!(got.root(), &BTreeSet::from([1, 2, 4]));
        for q0 in [r(1, 2), r(1, 3), r(2, 3)] {
            let x = rational_to_f64(&q0);
            let want = (1.0 - x.powi(4)).sqrt();
            assert!((got.eval(&q0).unwrap() - want).abs() < 1e-15);
        }
    }

    #[test]
    fn signature_cancellation() {
        let a = RadicalSum::from(radical_canonicalize(&[2]));
        let b = RadicalSum::from(radical_canonicalize(&[4]));
        assert!((&(&a + &b) - &(&b + &a)).is_zero());
        assert!(!(&a - &b).is_zero());
        let prod = &a * &a;
        assert_eq!(
            prod,
            RadicalSum::from(LaurentPoly::from_int_terms([(0, 1), (2, -1)]))
        );
    }
}
