use std::fmt::Write as _;

use nalgebra::DMatrix;
use num::complex::Complex64;

use super::{apply_element, Amplitude, RepConfig, RepError, StateVector};
use crate::algebra::{Element, Generator};

/// Sparse matrix on the truncated space, indexed by basis rank.
///
/// Entries are kept sorted by `(col, row)` with at most one entry per slot.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<A = Complex64> {
    dim: usize,
    entries: Vec<(usize, usize, A)>,
}

impl<A: Amplitude> SparseMatrix<A> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `(row, col, value)` triples, column-major.
    pub fn entries(&self) -> &[(usize, usize, A)] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> A {
        self.entries
            .binary_search_by(|(r, c, _)| (*c, *r).cmp(&(col, row)))
            .map(|k| self.entries[k].2.clone())
            .unwrap_or_else(|_| A::zero())
    }

    fn from_columns(dim: usize, columns: Vec<StateVector<A>>, cfg: &RepConfig) -> Self {
        let mut entries = Vec::new();
        for (col, v) in columns.into_iter().enumerate() {
            let mut column: Vec<(usize, usize, A)> = v
                .iter()
                .map(|(k, a)| (cfg.rank(k), col, a.clone()))
                .collect();
            column.sort_by_key(|(r, _, _)| *r);
            entries.extend(column);
        }
        Self { dim, entries }
    }
}

impl SparseMatrix<Complex64> {
    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let mut m = DMatrix::zeros(self.dim, self.dim);
        for (r, c, v) in &self.entries {
            m[(*r, *c)] = *v;
        }
        m
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries.iter().all(|(r, c, _)| r == c)
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut merged: std::collections::BTreeMap<(usize, usize), Complex64> =
            std::collections::BTreeMap::new();
        for (r, c, v) in self.entries.iter().chain(other.entries.iter()) {
            *merged
                .entry((*c, *r))
                .or_insert_with(|| Complex64::new(0.0, 0.0)) += v;
        }
        Self {
            dim: self.dim,
            entries: merged
                .into_iter()
                .filter(|(_, v)| !Amplitude::is_zero(v))
                .map(|((c, r), v)| (r, c, v))
                .collect(),
        }
    }

    pub fn adjoint(&self) -> Self {
        let mut entries: Vec<_> = self
            .entries
            .iter()
            .map(|(r, c, v)| (*c, *r, v.conj()))
            .collect();
        entries.sort_by_key(|(r, c, _)| (*c, *r));
        Self {
            dim: self.dim,
            entries,
        }
    }

    /// JSON export with 17 significant digits per value.
    pub fn to_json(&self, cfg: &RepConfig) -> String {
        let lam = cfg.lambda_complex();
        let mut out = String::new();
        write!(
            out,
            "{{\"algebra\":\"Sigma\",\"n\":{},\"K\":{},\"q\":\"{}\",\"lambda\":[{},{}],\"dim\":{},\"basis_order\":\"lex_k1_major\",\"entries\":[",
            cfg.n(),
            cfg.cutoff(),
            rational_text(cfg.q0()),
            fmt_f64(lam.re),
            fmt_f64(lam.im),
            self.dim
        )
        .unwrap();
        for (j, (r, c, v)) in self.entries.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            write!(out, "[{r},{c},{},{}]", fmt_f64(v.re), fmt_f64(v.im)).unwrap();
        }
        out.push_str("]}");
        out
    }
}

fn rational_text(q: &num::BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// 17 significant digits in JSON-compatible exponent notation.
pub fn fmt_f64(x: f64) -> String {
    // -0.0 would print with a sign that differs across equivalent runs of
    // different summation orders; normalize it.
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

/// Matrix of `pi(e)`: column `j` is `e` applied to the basis vector of rank `j`.
pub fn matrix<A: Amplitude>(e: &Element, cfg: &RepConfig) -> Result<SparseMatrix<A>, RepError> {
    let columns = cfg
        .indices()
        .map(|k| apply_element(e, &StateVector::basis(k, cfg), cfg))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SparseMatrix::from_columns(cfg.dim(), columns, cfg))
}

/// `lambda q0^{|k| + k_n}` for every truncated index, in rank order.
pub fn yn1_spectrum(cfg: &RepConfig) -> Vec<Complex64> {
    let lam = cfg.lambda_complex();
    cfg.indices()
        .map(|k| lam * cfg.q_pow_f64(k.total() + k.get(cfg.n())))
        .collect()
}

/// The generator `y_{n+1}` of the configuration.
pub fn top_generator(cfg: &RepConfig) -> Generator {
    Generator::y(cfg.n() + 1)
}
