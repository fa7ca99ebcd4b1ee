use super::{CheckParams, CheckReport, VerifyError};
use crate::algebra::{
    normalize, quotient_map, Element, Generator, Kind, Presentation, Relation, DEFAULT_FUEL,
};
use crate::scalar::{rational_to_f64, LaurentPoly};

/// Size of a symbolic residual: its largest coefficient in absolute value.
/// Positive for every nonzero element.
fn coefficient_size(e: &Element) -> f64 {
    e.terms()
        .flat_map(|(_, c)| c.terms().map(|(_, r)| rational_to_f64(r).abs()))
        .fold(0.0, f64::max)
}

fn check_zero(
    report: &mut CheckReport,
    label: &str,
    e: &Element,
    p: &Presentation,
    fuel: u64,
) -> Result<(), VerifyError> {
    let r = normalize(e, p, fuel)?;
    if !r.is_zero() {
        report.fail(format!("{label}: {r}"), coefficient_size(&r));
    }
    Ok(())
}

pub fn check_symbolic_relations(p: &Presentation) -> Result<CheckReport, VerifyError> {
    check_symbolic_relations_with_fuel(p, DEFAULT_FUEL)
}

/// Every relation and its adjoint must normalize to zero. The sphere relation
/// is included only when the presentation reduces by it. For `S`, the image of
/// every relation under the quotient map must also vanish in the quotient.
pub fn check_symbolic_relations_with_fuel(
    p: &Presentation,
    fuel: u64,
) -> Result<CheckReport, VerifyError> {
    let mut report = CheckReport::new("symbolic-relations", CheckParams::symbolic(p), 0.0);
    for rel in p.relations() {
        for r in [rel.clone(), rel.star()] {
            check_zero(&mut report, &r.name, &r.residual(), p, fuel)?;
        }
    }
    if p.kind() == Kind::S {
        let quotient = Presentation::new(Kind::Sigma, p.n(), true)?;
        for rel in p.relations() {
            let image = quotient_map(&rel.residual(), p.n());
            check_zero(
                &mut report,
                &format!("quotient of {}", rel.name),
                &image,
                &quotient,
                fuel,
            )?;
        }
    }
    Ok(report.finish())
}

/// `y_i (y_i*)^m = mu^m (y_i*)^m y_i + (1 - mu^m)(y_i*)^{m-1}(1 - sum_{k<i} y_k* y_k)`
/// with `mu = q^2` for `i < n` and `mu = q^4` for `i = n`.
pub fn lemma_aux_relation(n: u32, i: u32, m: u32) -> Relation {
    let yi = Generator::y(i);
    let raise = Element::generator(yi.star());
    let lower = Element::generator(yi);
    let step = if i < n { 2 } else { 4 };
    let mu_m = LaurentPoly::q_pow((step * m) as i32);
    let below = (1..i).fold(Element::one(), |acc, k| {
        &acc - &Element::product_of(&[Generator::y(k).star(), Generator::y(k)])
    });
    let lhs = &lower * &raise.pow(m);
    let rhs = &(&raise.pow(m) * &lower).scale(&mu_m)
        + &(&raise.pow(m - 1) * &below).scale(&(&LaurentPoly::one() - &mu_m));
    Relation {
        name: format!("aux i={i} m={m}"),
        lhs,
        rhs,
        sphere: false,
    }
}

pub fn check_lemma_aux(p: &Presentation, m_max: u32) -> Result<CheckReport, VerifyError> {
    check_lemma_aux_with_fuel(p, m_max, DEFAULT_FUEL)
}

/// Checks every power identity for `1 <= i <= n` and `1 <= m <= m_max`.
/// The identities use the sphere relation, so reduction by it must be on.
pub fn check_lemma_aux_with_fuel(
    p: &Presentation,
    m_max: u32,
    fuel: u64,
) -> Result<CheckReport, VerifyError> {
    if p.kind() != Kind::Sigma || !p.sphere_reduction() {
        return Err(VerifyError::Precondition(
            "the power identities need the quotient algebra with sphere reduction on".into(),
        ));
    }
    if m_max < 1 {
        return Err(VerifyError::Precondition("m_max must be at least 1".into()));
    }
    let mut params = CheckParams::symbolic(p);
    params.m_max = Some(m_max);
    let mut report = CheckReport::new("lemma-aux", params, 0.0);
    for i in 1..=p.n() {
        for m in 1..=m_max {
            let rel = lemma_aux_relation(p.n(), i, m);
            check_zero(&mut report, &rel.name, &rel.residual(), p, fuel)?;
        }
    }
    Ok(report.finish())
}
