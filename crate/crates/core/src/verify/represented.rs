use num::complex::Complex64;

use super::{CheckParams, CheckReport, VerifyError, GUARD_Q0, NUMERIC_TOL};
use crate::algebra::{Element, Kind, Presentation};
use crate::rep::{apply_element, ExactAmplitude, FockIndex, Mode, RepConfig, StateVector};
use crate::scalar::BigRational;

/// Numeric copies of `c` at the guard points.
pub(super) fn guard_configs(c: &RepConfig) -> Result<Vec<RepConfig>, VerifyError> {
    GUARD_Q0
        .iter()
        .map(|&(a, b)| {
            let g = c.with_q0(BigRational::new(a.into(), b.into()))?;
            Ok(g.with_mode(Mode::Numeric)?)
        })
        .collect()
}

/// Largest amplitude of `pi(e)|k>` in double precision.
pub(super) fn numeric_residual(
    e: &Element,
    k: &FockIndex,
    c: &RepConfig,
) -> Result<f64, VerifyError> {
    let v: StateVector<Complex64> = apply_element(e, &StateVector::basis(k.clone(), c), c)?;
    Ok(v.max_magnitude(c))
}

/// Records whether `pi(e)` annihilates `|k>`: symbolically in exact mode,
/// followed by a numeric re-check at every guard point, or to
/// [`NUMERIC_TOL`] in numeric mode.
pub(super) fn check_annihilates(
    report: &mut CheckReport,
    label: &str,
    e: &Element,
    k: &FockIndex,
    c: &RepConfig,
    guards: &[RepConfig],
) -> Result<(), VerifyError> {
    match c.mode() {
        Mode::Numeric => {
            let r = numeric_residual(e, k, c)?;
            report.record_with(format!("{label} on {k}"), r, NUMERIC_TOL);
        }
        Mode::Exact => {
            let v: StateVector<ExactAmplitude> =
                apply_element(e, &StateVector::basis(k.clone(), c), c)?;
            if v.is_zero() {
                report.record(format!("{label} on {k}"), 0.0);
            } else {
                report.fail(format!("{label} on {k} (symbolic)"), v.max_magnitude(c));
            }
            for g in guards {
                let r = numeric_residual(e, k, g)?;
                let q = g.q0();
                report.record_with(
                    format!("{label} on {k} at q={}/{}", q.numer(), q.denom()),
                    r,
                    NUMERIC_TOL,
                );
            }
        }
    }
    Ok(())
}

/// Applies every defining relation and its adjoint to basis vectors. The
/// sphere relation is tested on the whole truncation, the others on indices
/// with every `k_i <= K - 2`.
pub fn check_relations_in_rep(c: &RepConfig, p: &Presentation) -> Result<CheckReport, VerifyError> {
    if p.kind() != Kind::Sigma || p.n() != c.n() {
        return Err(VerifyError::Precondition(format!(
            "representations are defined for the quotient algebra with n = {}",
            c.n()
        )));
    }
    if c.cutoff() < 2 {
        return Err(VerifyError::Config("the cutoff must be at least 2".into()));
    }
    let mut report = CheckReport::new("relations-in-rep", CheckParams::rep(c), NUMERIC_TOL);
    let guards = match c.mode() {
        Mode::Exact => guard_configs(c)?,
        Mode::Numeric => Vec::new(),
    };
    for rel in p.defining_relations() {
        for r in [rel.clone(), rel.star()] {
            let residual = r.residual();
            for k in c.indices() {
                if r.sphere || c.is_interior(&k, 2) {
                    check_annihilates(&mut report, &r.name, &residual, &k, c, &guards)?;
                }
            }
        }
    }
    Ok(report.finish())
}
