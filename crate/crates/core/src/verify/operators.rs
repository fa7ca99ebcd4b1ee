use nalgebra::DMatrix;
use num::complex::Complex64;
use num::One;

use super::represented::{check_annihilates, guard_configs};
use super::{CheckParams, CheckReport, VerifyError, NUMERIC_TOL, SQRT_TOL};
use crate::algebra::{Element, Generator};
use crate::rep::{
    apply_element, matrix, top_generator, ExactAmplitude, FockIndex, Mode, RepConfig, StateVector,
};
use crate::scalar::{qpochhammer, radical_canonicalize, rational_to_f64, BigRational, LaurentPoly};

/// Singular values below this count as zero.
pub const KERNEL_TOL: f64 = 1e-10;

type Dense = DMatrix<Complex64>;

fn dense(e: &Element, c: &RepConfig) -> Result<Dense, VerifyError> {
    Ok(matrix::<Complex64>(e, c)?.to_dense())
}

fn numeric(c: &RepConfig) -> Result<RepConfig, VerifyError> {
    Ok(c.with_mode(Mode::Numeric)?)
}

fn y(i: u32) -> Generator {
    Generator::y(i)
}

/// `sum_{i=from}^{n+1} y_i* y_i`.
fn tail_sum(from: u32, n: u32) -> Element {
    (from..=n + 1).fold(Element::zero(), |acc, i| {
        &acc + &Element::product_of(&[y(i).star(), y(i)])
    })
}

fn block(m: &Dense, rows: &[usize], cols: &[usize]) -> Dense {
    Dense::from_fn(rows.len(), cols.len(), |r, c| m[(rows[r], cols[c])])
}

fn max_abs(m: &Dense) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Number of singular values of the stacked matrices below [`KERNEL_TOL`].
fn stacked_kernel_dim(mats: &[Dense], dim: usize) -> usize {
    if mats.is_empty() {
        return dim;
    }
    let mut stacked = Dense::zeros(dim * mats.len(), dim);
    for (j, m) in mats.iter().enumerate() {
        stacked.view_mut((j * dim, 0), (dim, dim)).copy_from(m);
    }
    stacked
        .svd(false, false)
        .singular_values
        .iter()
        .filter(|&&s| s < KERNEL_TOL)
        .count()
}

/// `dim H_k` for `k = 1..n`, where `H_k` is the joint kernel of
/// `pi(y_1), .., pi(y_k)`.
pub fn joint_kernel_dims(c: &RepConfig) -> Result<Vec<usize>, VerifyError> {
    let c = numeric(c)?;
    let lowers = (1..=c.n())
        .map(|i| dense(&Element::generator(y(i)), &c))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((1..=c.n() as usize)
        .map(|k| stacked_kernel_dim(&lowers[..k], c.dim()))
        .collect())
}

/// Compares the joint kernels with the count of indices whose first `k`
/// components vanish, and checks that `pi(y_{n+1})` is injective.
pub fn check_kernel(c: &RepConfig) -> Result<CheckReport, VerifyError> {
    let mut report = CheckReport::new("kernel", CheckParams::rep(c), 0.0);
    let dims = joint_kernel_dims(c)?;
    for (j, &d) in dims.iter().enumerate() {
        let k = j + 1;
        let expected = c
            .indices()
            .filter(|idx| idx.components()[..k].iter().all(|&x| x == 0))
            .count();
        report.record(
            format!("dim H_{k} = {d}, expected {expected}"),
            d.abs_diff(expected) as f64,
        );
    }
    let nc = numeric(c)?;
    let top = dense(&Element::generator(top_generator(&nc)), &nc)?;
    let null = stacked_kernel_dim(&[top], nc.dim());
    report.record(format!("dim ker y{} = {null}", nc.n() + 1), null as f64);
    Ok(report.finish())
}

fn mu(c: &RepConfig, k: u32) -> LaurentPoly {
    LaurentPoly::q_pow(if k < c.n() { 2 } else { 4 })
}

/// Operator identities for `A = sum_{i>k} pi(y_i* y_i)` and `B = pi(y_k)`
/// restricted to `H_{k-1}`:
///
/// * `[B, B*] = (1 - mu) A` and `A + B* B = 1` on interior indices;
/// * with `U = (B B*)^{-1/2} B`, `mu A = U A U*` and `U U* = 1`.
///
/// `H_{k-1}` is spanned by the basis vectors killed by `y_1, .., y_{k-1}`;
/// the count is cross-checked against the numerical joint kernel. In exact
/// mode the two polynomial identities are also verified symbolically.
pub fn check_lemma_main(c: &RepConfig, k: u32) -> Result<CheckReport, VerifyError> {
    let n = c.n();
    if !(1..=n).contains(&k) {
        return Err(VerifyError::Precondition(format!(
            "k must lie in 1..={n}, got {k}"
        )));
    }
    if c.cutoff() < 2 {
        return Err(VerifyError::Config("the cutoff must be at least 2".into()));
    }
    let mut params = CheckParams::rep(c);
    params.k = Some(k);
    let mut report = CheckReport::new("lemma-main", params, SQRT_TOL);

    let nc = numeric(c)?;
    let mu_poly = mu(c, k);
    let mu = mu_poly.eval(c.q0()).map_err(crate::rep::RepError::from)?;
    let a_el = tail_sum(k + 1, n);
    let b_el = Element::generator(y(k));
    let a_full = dense(&a_el, &nc)?;
    let b_full = dense(&b_el, &nc)?;

    let lowers = (1..k)
        .map(|i| dense(&Element::generator(y(i)), &nc))
        .collect::<Result<Vec<_>, _>>()?;
    let h: Vec<usize> = (0..nc.dim())
        .filter(|&r| lowers.iter().all(|m| m.column(r).norm() < KERNEL_TOL))
        .collect();
    let kernel_dim = stacked_kernel_dim(&lowers, nc.dim());
    if kernel_dim != h.len() {
        report.fail(
            format!(
                "H_{} has dimension {kernel_dim} but {} basis vectors",
                k - 1,
                h.len()
            ),
            kernel_dim.abs_diff(h.len()) as f64,
        );
        return Ok(report.finish());
    }
    // Positions (within H) of the interior indices.
    let interior: Vec<usize> = h
        .iter()
        .enumerate()
        .filter(|(_, &r)| nc.is_interior(&nc.index_of_rank(r), 2))
        .map(|(j, _)| j)
        .collect();
    let all: Vec<usize> = (0..h.len()).collect();

    let a = block(&a_full, &h, &h);
    let b = block(&b_full, &h, &h);
    let bs = b.adjoint();
    let bbs = &b * &bs;
    let bsb = &bs * &b;
    let one = Dense::identity(h.len(), h.len());

    let comm = &bbs - &bsb - &a * Complex64::new(1.0 - mu, 0.0);
    report.record_with(
        "[B,B*] - (1-mu)A",
        max_abs(&block(&comm, &interior, &interior)),
        NUMERIC_TOL,
    );
    let sphere = &a + &bsb - &one;
    report.record_with(
        "A + B*B - 1",
        max_abs(&block(&sphere, &interior, &interior)),
        NUMERIC_TOL,
    );

    let m = block(&bbs, &interior, &interior);
    let eig = m.clone().symmetric_eigen();
    let min_eig = eig
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min);
    if min_eig.is_nan() || min_eig <= 0.0 {
        return Err(VerifyError::Config(format!(
            "B B* is not positive definite on the interior (smallest eigenvalue {min_eig:e}); increase K"
        )));
    }
    let inv_sqrt = Dense::from_diagonal(
        &eig.eigenvalues
            .map(|l| Complex64::new(l.sqrt().recip(), 0.0)),
    );
    let m_inv_sqrt = &eig.eigenvectors * inv_sqrt * eig.eigenvectors.adjoint();
    let u = &m_inv_sqrt * block(&b, &interior, &all);
    let uau = &u * &a * u.adjoint();
    let lhs = block(&a, &interior, &interior) * Complex64::new(mu, 0.0);
    report.record_with("mu A - U A U*", max_abs(&(lhs - uau)), SQRT_TOL);
    let uu = &u * u.adjoint() - Dense::identity(interior.len(), interior.len());
    report.record_with("U U* - 1", max_abs(&uu), SQRT_TOL);

    if c.mode() == Mode::Exact {
        let yk = y(k);
        let commutator =
            &Element::product_of(&[yk, yk.star()]) - &Element::product_of(&[yk.star(), yk]);
        let e1 = &commutator - &a_el.scale(&(&LaurentPoly::one() - &mu_poly));
        let e2 = &(&a_el + &Element::product_of(&[yk.star(), yk])) - &Element::one();
        let guards = guard_configs(c)?;
        for &j in &interior {
            let idx = nc.index_of_rank(h[j]);
            check_annihilates(&mut report, "[B,B*] - (1-mu)A", &e1, &idx, c, &guards)?;
            check_annihilates(&mut report, "A + B*B - 1", &e2, &idx, c, &guards)?;
        }
    }
    Ok(report.finish())
}

/// The indices with every component at most `K - 1`, and for each the
/// radical atoms `2, 4, .., 2 k_i` (`4, 8, .., 4 k_n` in the last slot)
/// collected by raising the vacuum to it.
fn raising_atoms(k: &FockIndex, n: u32) -> Vec<u32> {
    let mut atoms = Vec::new();
    for i in 1..=n {
        let step = if i < n { 2 } else { 4 };
        atoms.extend((1..=k.get(i)).map(|j| step * j));
    }
    atoms
}

fn raising_word(k: &FockIndex, n: u32) -> Element {
    let letters: Vec<Generator> = (1..=n)
        .flat_map(|i| std::iter::repeat_n(y(i).star(), k.get(i) as usize))
        .collect();
    Element::product_of(&letters)
}

/// `(q^2;q^2)_{k_1} .. (q^2;q^2)_{k_{n-1}} (q^4;q^4)_{k_n}`.
fn norm_squared(k: &FockIndex, n: u32) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, i| {
        let b = LaurentPoly::q_pow(if i < n { 2 } else { 4 });
        &acc * &qpochhammer(&b, &b, k.get(i))
    })
}

/// Builds `v_k = (y_1*)^{k_1} .. (y_n*)^{k_n} |0> / sqrt(norm)` for every
/// `k` with all `k_i <= K - 1`, and checks that the Gram matrix is the
/// identity and that `v_k = |k>`. In exact mode the unnormalized vector is
/// compared symbolically with `sqrt(norm) |k>`.
pub fn check_lowest_weight_basis(c: &RepConfig) -> Result<CheckReport, VerifyError> {
    let n = c.n();
    let mut report = CheckReport::new("lowest-weight-basis", CheckParams::rep(c), NUMERIC_TOL);
    let nc = numeric(c)?;
    let vacuum = FockIndex::zero(n);
    let ks: Vec<FockIndex> = c.indices().filter(|k| c.is_interior(k, 1)).collect();

    let mut vectors: Vec<StateVector<Complex64>> = Vec::with_capacity(ks.len());
    for k in &ks {
        let word = raising_word(k, n);
        let raw: StateVector<Complex64> =
            apply_element(&word, &StateVector::basis(vacuum.clone(), &nc), &nc)?;
        let norm = norm_squared(k, n)
            .eval(c.q0())
            .map_err(crate::rep::RepError::from)?;
        let v = raw.scale(&Complex64::new(norm.sqrt().recip(), 0.0));
        let diff = v.sub_state(&StateVector::basis(k.clone(), &nc));
        report.record(format!("v{k} - {k}"), diff.max_magnitude(&nc));
        vectors.push(v);
    }
    for (a, va) in vectors.iter().enumerate() {
        for (b, vb) in vectors.iter().enumerate() {
            let mut g = Complex64::new(0.0, 0.0);
            for (idx, x) in va.iter() {
                g += x.conj() * vb.amplitude(idx);
            }
            if a == b {
                g -= Complex64::one();
            }
            report.record(format!("gram[{},{}]", ks[a], ks[b]), g.norm());
        }
    }

    if c.mode() == Mode::Exact {
        for k in &ks {
            let word = raising_word(k, n);
            let raw: StateVector<ExactAmplitude> =
                apply_element(&word, &StateVector::basis(vacuum.clone(), c), c)?;
            let scalar = radical_canonicalize(&raising_atoms(k, n));
            let expected = StateVector::<ExactAmplitude>::basis(k.clone(), c)
                .scale(&ExactAmplitude::real(scalar.clone().into()));
            if raw != expected {
                report.fail(
                    format!("raised vacuum at {k} (symbolic)"),
                    raw.sub_state(&expected).max_magnitude(c),
                );
            }
            if scalar.square() != norm_squared(k, n) {
                report.fail(format!("normalization at {k} (symbolic)"), 1.0);
            }
            for g in guard_configs(c)? {
                let numeric: StateVector<Complex64> =
                    apply_element(&word, &StateVector::basis(vacuum.clone(), &g), &g)?;
                let s = scalar.eval(g.q0()).map_err(crate::rep::RepError::from)?;
                let diff = numeric
                    .sub_state(&StateVector::basis(k.clone(), &g).scale(&Complex64::new(s, 0.0)));
                let q = g.q0();
                report.record(
                    format!("raised vacuum at {k}, q={}/{}", q.numer(), q.denom()),
                    diff.max_magnitude(&g),
                );
            }
        }
    }
    Ok(report.finish())
}

/// The diagonal of `pi(y_{n+1})` must equal `lambda q0^{|k| + k_n}` exactly,
/// as a multiset, and the matrix must be diagonal.
pub fn check_spectrum(c: &RepConfig) -> Result<CheckReport, VerifyError> {
    let nc = numeric(c)?;
    let mut report = CheckReport::new("spectrum", CheckParams::rep(c), 0.0);
    let m = matrix::<Complex64>(&Element::generator(top_generator(&nc)), &nc)?;
    if !m.is_diagonal() {
        report.fail("matrix of the top generator is not diagonal", f64::INFINITY);
    }
    let lam = nc.lambda_complex();
    let mut expected: Vec<Complex64> = nc
        .indices()
        .map(|k| {
            let e = k.total() + k.get(nc.n());
            let qe: BigRational = num::traits::Pow::pow(nc.q0(), e);
            lam * rational_to_f64(&qe)
        })
        .collect();
    let mut actual: Vec<Complex64> = (0..nc.dim()).map(|r| m.get(r, r)).collect();
    let key = |a: &Complex64, b: &Complex64| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im));
    expected.sort_by(key);
    actual.sort_by(key);
    if expected.len() != actual.len() {
        report.fail("multiset sizes differ", f64::INFINITY);
    }
    for (j, (a, e)) in actual.iter().zip(&expected).enumerate() {
        report.record(format!("eigenvalue {j}: {a} vs {e}"), (a - e).norm());
    }
    Ok(report.finish())
}
