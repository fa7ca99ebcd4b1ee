use super::*;
use crate::algebra::{Kind, Presentation};
use crate::rep::{Lambda, Mode, RepConfig};
use crate::scalar::parse_rational;

fn cfg(n: u32, q0: &str, lambda: Lambda, k: u32, mode: Mode) -> RepConfig {
    RepConfig::new(n, parse_rational(q0).unwrap(), lambda, k, mode).unwrap()
}

fn assert_passed(r: &CheckReport) {
    assert!(r.passed, "{r}");
}

#[test]
fn symbolic_relations_close() {
    for n in 1..=3 {
        assert_passed(&check_symbolic_relations(&Presentation::sigma(n).unwrap()).unwrap());
    }
    for sphere in [true, false] {
        let p = Presentation::new(Kind::S, 2, sphere).unwrap();
        assert_passed(&check_symbolic_relations(&p).unwrap());
    }
}

#[test]
fn nonzero_actions_are_witnessed() {
    use crate::algebra::{Element, Generator};
    use crate::rep::FockIndex;
    let c = cfg(1, "1/2", Lambda::one(), 3, Mode::Exact);
    let guards = represented::guard_configs(&c).unwrap();
    let mut r = CheckReport::new("demo", CheckParams::rep(&c), NUMERIC_TOL);
    let e = Element::generator(Generator::y(1));
    represented::check_annihilates(&mut r, "y1", &e, &FockIndex::new(vec![1]), &c, &guards)
        .unwrap();
    let r = r.finish();
    assert!(!r.passed);
    // one symbolic witness plus one per guard point
    assert_eq!(r.witnesses.len(), 4);
}

#[test]
fn lemma_aux_small_cases() {
    let p = Presentation::sigma(2).unwrap();
    assert_passed(&check_lemma_aux(&p, 1).unwrap());
    let p = Presentation::sigma(1).unwrap();
    assert_passed(&check_lemma_aux(&p, 3).unwrap());
    let off = Presentation::new(Kind::Sigma, 1, false).unwrap();
    assert!(check_lemma_aux(&off, 2).is_err());
    assert!(check_lemma_aux(&Presentation::s(1).unwrap(), 2).is_err());
}

#[test]
fn lemma_main_examples() {
    let c = cfg(1, "1/2", Lambda::one(), 6, Mode::Numeric);
    let r = check_lemma_main(&c, 1).unwrap();
    assert_passed(&r);
    assert!(r.max_residual <= 1e-10);

    let c = cfg(2, "3/5", Lambda::i(), 5, Mode::Numeric);
    for k in 1..=2 {
        let r = check_lemma_main(&c, k).unwrap();
        assert_passed(&r);
        assert!(r.max_residual <= 1e-10, "{r}");
    }
    assert!(check_lemma_main(&c, 3).is_err());
}

#[test]
fn lemma_main_exact() {
    let c = cfg(2, "1/2", Lambda::i(), 4, Mode::Exact);
    for k in 1..=2 {
        assert_passed(&check_lemma_main(&c, k).unwrap());
    }
}

#[test]
fn kernel_dimensions() {
    let c = cfg(2, "1/2", Lambda::one(), 3, Mode::Numeric);
    assert_eq!(joint_kernel_dims(&c).unwrap(), vec![4, 1]);
    let c = cfg(1, "1/2", Lambda::one(), 5, Mode::Numeric);
    assert_eq!(joint_kernel_dims(&c).unwrap(), vec![1]);
    assert_passed(&check_kernel(&c).unwrap());
}

#[test]
fn lowest_weight_basis() {
    let c = cfg(2, "1/2", Lambda::one(), 4, Mode::Numeric);
    assert_passed(&check_lowest_weight_basis(&c).unwrap());
    let c = cfg(2, "3/5", Lambda::one(), 3, Mode::Exact);
    assert_passed(&check_lowest_weight_basis(&c).unwrap());
}

#[test]
fn relations_in_rep() {
    let c = cfg(1, "1/2", Lambda::one(), 5, Mode::Exact);
    let r = check_relations_in_rep(&c, &Presentation::sigma(1).unwrap()).unwrap();
    assert_passed(&r);
    let c = cfg(2, "3/5", Lambda::from_angle(0.9), 4, Mode::Numeric);
    let p = Presentation::new(Kind::Sigma, 2, false).unwrap();
    let r = check_relations_in_rep(&c, &p).unwrap();
    assert_passed(&r);
    assert!(r.max_residual <= 1e-12);
    assert!(check_relations_in_rep(&c, &Presentation::s(2).unwrap()).is_err());
}

#[test]
fn spectrum_matches_formula() {
    for n in 1..=2 {
        for k in 0..=6 {
            let c = cfg(n, "1/3", Lambda::i(), k, Mode::Numeric);
            assert_passed(&check_spectrum(&c).unwrap());
        }
    }
}

#[test]
fn report_semantics() {
    let mut r = CheckReport::new("demo", CheckParams::default(), 1e-8);
    r.record_with("a", 1e-9, 1e-12);
    let r = r.finish();
    assert!(!r.passed);
    assert_eq!(r.witnesses.len(), 1);

    let mut r = CheckReport::new("demo", CheckParams::default(), 1e-8);
    r.record("a", f64::NAN);
    assert!(!r.finish().passed);

    let r = CheckReport::new("demo", CheckParams::default(), 0.0).finish();
    let json = serde_json::to_string(&r).unwrap();
    assert_eq!(
        json,
        r#"{"check":"demo","params":{"n":0},"max_residual":0.0,"passed":true,"witnesses":[]}"#
    );
}

#[test]
fn suite_all_default_instance() {
    let p = Presentation::sigma(1).unwrap();
    let c = cfg(1, "1/2", Lambda::one(), 6, Mode::Numeric);
    let reports = run_suite_default(Suite::All, &p, &c).unwrap();
    assert_eq!(reports.len(), 6);
    for r in &reports {
        assert_passed(r);
    }
}

#[test]
fn wrong_power_identity_does_not_close() {
    // i = 2 is the last row for n = 2 (factor q^4) but not for n = 3 (q^2)
    let p = Presentation::sigma(3).unwrap();
    for m in 1..=3 {
        let wrong = lemma_aux_relation(2, 2, m);
        let r =
            crate::algebra::normalize(&wrong.residual(), &p, crate::algebra::DEFAULT_FUEL).unwrap();
        assert!(!r.is_zero(), "m = {m}");
        let right = lemma_aux_relation(3, 2, m);
        let r =
            crate::algebra::normalize(&right.residual(), &p, crate::algebra::DEFAULT_FUEL).unwrap();
        assert!(r.is_zero(), "m = {m}");
    }
}
