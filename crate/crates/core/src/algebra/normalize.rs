use super::{AlgebraError, Element, Presentation};

/// Default rewrite budget, in single rewrite steps.
pub const DEFAULT_FUEL: u64 = 1_000_000;

/// Rewrites `e` to normal form under `p`.
///
/// The largest pending word is always processed first and rewritten at its
/// leftmost reducible pair. Rules only produce smaller words, so each word is
/// visited once and equal words merge before they are expanded.
pub fn normalize(e: &Element, p: &Presentation, fuel: u64) -> Result<Element, AlgebraError> {
    normalize_counted(e, p, fuel).map(|(nf, _)| nf)
}

/// As [`normalize`], also returning the number of rewrite steps taken.
pub fn normalize_counted(
    e: &Element,
    p: &Presentation,
    fuel: u64,
) -> Result<(Element, u64), AlgebraError> {
    if let Some(g) = e.generators().find(|g| !p.contains(*g)) {
        return Err(AlgebraError::ForeignGenerator(format!(
            "{g} (valid: {})",
            p.generator_range()
        )));
    }
    let mut pending = e.clone();
    let mut done = Element::zero();
    let mut steps = 0u64;
    while let Some((word, c)) = pending.pop_largest() {
        let Some(pos) = p.first_reducible(&word) else {
            done.add_term(word, &c);
            continue;
        };
        if steps >= fuel {
            return Err(AlgebraError::FuelExhausted {
                steps,
                word: word.to_string(),
            });
        }
        steps += 1;
        let step = p.rewrite_at(&word, pos).expect("reducible position");
        for (w, d) in step.terms() {
            pending.add_term(w.clone(), &(&c * d));
        }
    }
    Ok((done, steps))
}

/// True when every word of `e` is normal for `p`.
pub fn is_normal_form(e: &Element, p: &Presentation) -> bool {
    e.terms().all(|(w, _)| p.is_normal(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Generator, Kind, Word};
    use crate::scalar::LaurentPoly;

    fn y(i: u32) -> Generator {
        Generator::y(i)
    }

    #[test]
    fn exchange_in_sigma() {
        let p = Presentation::sigma(2).unwrap();
        let nf = normalize(&Element::product_of(&[y(2), y(1)]), &p, DEFAULT_FUEL).unwrap();
        assert_eq!(nf.to_string(), "(q^-1)*y1y2");
    }

    #[test]
    fn commutator_without_sphere() {
        let p = Presentation::new(Kind::Sigma, 1, false).unwrap();
        let e =
            &Element::product_of(&[y(1), y(1).star()]) - &Element::product_of(&[y(1).star(), y(1)]);
        let nf = normalize(&e, &p, DEFAULT_FUEL).unwrap();
        assert_eq!(nf.to_string(), "(1 - q^4)*y2'y2");
    }

    #[test]
    fn commutator_with_sphere() {
        let p = Presentation::sigma(1).unwrap();
        let nf = normalize(&Element::product_of(&[y(1), y(1).star()]), &p, DEFAULT_FUEL).unwrap();
        assert_eq!(nf.to_string(), "(1)*1 + (-q^4)*y2'y2");
        // the same element written through y1'y1 instead of y2'y2
        let other = &Element::scalar(LaurentPoly::from_int_terms([(0, 1), (4, -1)]))
            + &Element::term(LaurentPoly::q_pow(4), Word::new(vec![y(1).star(), y(1)]));
        assert_eq!(normalize(&other, &p, DEFAULT_FUEL).unwrap(), nf);
    }

    #[test]
    fn fuel_exhaustion_reports_word() {
        let p = Presentation::sigma(2).unwrap();
        let e = Element::product_of(&[y(3), y(2), y(1)]);
        match normalize(&e, &p, 1) {
            Err(AlgebraError::FuelExhausted { steps: 1, word }) => assert!(!word.is_empty()),
            other => panic!("expected fuel exhaustion, got {other:?}"),
        }
        assert!(normalize(&e, &p, 3).is_ok());
    }

    #[test]
    fn foreign_generator_rejected() {
        let p = Presentation::sigma(1).unwrap();
        let e = Element::generator(Generator::x(1));
        assert!(matches!(
            normalize(&e, &p, 10),
            Err(AlgebraError::ForeignGenerator(_))
        ));
    }

    #[test]
    fn normal_words_are_fixed() {
        let p = Presentation::s(2).unwrap();
        let w = Word::new(vec![
            Generator::y(1).star(),
            Generator::x(1).star(),
            Generator::x(2),
            Generator::y(1),
        ]);
        assert!(p.is_normal(&w));
        let e = Element::term(LaurentPoly::q_pow(3), w);
        assert_eq!(normalize(&e, &p, 10).unwrap(), e);
    }
}
