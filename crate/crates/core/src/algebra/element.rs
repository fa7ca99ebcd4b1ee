use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    X,
    Y,
}

/// A generator `x_i`, `y_i` or one of their adjoints.
///
/// The total order puts every starred generator before every unstarred one.
/// Unstarred generators ascend with `x` before `y`, then by index; the starred
/// block is the mirror image, so the adjoint of a normal word is normal:
///
/// `y_n* < .. < y_1* < x_n* < .. < x_1* < x_1 < .. < x_n < y_1 < .. < y_n`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub family: Family,
    pub index: u32,
    pub starred: bool,
}

impl Generator {
    pub const fn x(index: u32) -> Self {
        Self {
            family: Family::X,
            index,
            starred: false,
        }
    }

    pub const fn y(index: u32) -> Self {
        Self {
            family: Family::Y,
            index,
            starred: false,
        }
    }

    pub const fn star(self) -> Self {
        Self {
            starred: !self.starred,
            ..self
        }
    }

    fn key(&self) -> (bool, i64, i64) {
        let (f, i) = (self.family as i64, self.index as i64);
        if self.starred {
            (false, -f, -i)
        } else {
            (true, f, i)
        }
    }
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.family {
            Family::X => 'x',
            Family::Y => 'y',
        };
        write!(f, "{letter}{}", self.index)?;
        if self.starred {
            f.write_str("'")?;
        }
        Ok(())
    }
}

/// A monomial: a finite product of generators. The empty word is the unit.
///
/// Words are ordered degree-lexicographically (shorter first, then letter by
/// letter in generator order). This is a monomial order, and every rewrite
/// rule maps its left side to strictly smaller words under it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn new(letters: Vec<Generator>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Replaces the letters in `range` with `middle`.
    pub fn splice(&self, start: usize, end: usize, middle: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() - (end - start) + middle.len());
        v.extend_from_slice(&self.0[..start]);
        v.extend_from_slice(&middle.0);
        v.extend_from_slice(&self.0[end..]);
        Word(v)
    }

    pub fn star(&self) -> Word {
        Word(self.0.iter().rev().map(|g| g.star()).collect())
    }

    /// Number of pairs `(i, j)` with `i < j` and `letters[i] > letters[j]`.
    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<Generator>> for Word {
    fn from(v: Vec<Generator>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for g in &self.0 {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// A finite linear combination of words with Laurent polynomial coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<Word, LaurentPoly>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(LaurentPoly::one())
    }

    pub fn scalar(c: LaurentPoly) -> Self {
        Self::term(c, Word::unit())
    }

    pub fn generator(g: Generator) -> Self {
        Self::word(Word::new(vec![g]))
    }

    pub fn word(w: Word) -> Self {
        Self::term(LaurentPoly::one(), w)
    }

    pub fn term(c: LaurentPoly, w: Word) -> Self {
        let mut e = Self::zero();
        e.add_term(w, &c);
        e
    }

    /// Product of the given generators, in order.
    pub fn product_of(letters: &[Generator]) -> Self {
        Self::word(Word::new(letters.to_vec()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending word order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// The largest word with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &LaurentPoly)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, w: Word, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub(crate) fn pop_largest(&mut self) -> Option<(Word, LaurentPoly)> {
        self.terms.pop_last()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), &(v * c));
        }
        out
    }

    /// The adjoint: reverse each word and toggle every star. Coefficients are
    /// real Laurent polynomials and stay fixed.
    pub fn star(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.star(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, m: u32) -> Self {
        (0..m).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Keeps the terms whose word passes `keep`, after mapping each word.
    pub fn map_words<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&Word) -> Option<Word>,
    {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            if let Some(w) = f(w) {
                out.add_term(w, c);
            }
        }
        out
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.terms.keys().flat_map(|w| w.letters().iter().copied())
    }
}

impl From<Generator> for Element {
    fn from(g: Generator) -> Self {
        Element::generator(g)
    }
}

impl From<LaurentPoly> for Element {
    fn from(c: LaurentPoly) -> Self {
        Element::scalar(c)
    }
}

impl Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), &-c);
        }
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Mul<&Element> for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        let mut out = Element::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                out.add_term(wa.concat(wb), &(ca * cb));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<Element> for Element {
            type Output = Element;
            fn $m(self, rhs: Element) -> Element {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Element> for Element {
            type Output = Element;
            fn $m(self, rhs: &Element) -> Element {
                (&self).$m(rhs)
            }
        }
        impl $tr<Element> for &Element {
            type Output = Element;
            fn $m(self, rhs: Element) -> Element {
                self.$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

/// Canonical text, e.g. `(1 - q^4)*1 + (q^4)*y1'y1`; the zero element prints as `0`.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{w}")?;
        }
        Ok(())
    }
}
