//! The representation on truncated Fock space: basis actions, matrices and
//! the JSON export, in double precision and in exact radicals.

use num::complex::Complex64;
use qsphere::algebra::{Element, Generator, Presentation};
use qsphere::expr::parse;
use qsphere::rep::{
    apply_element, matrix, ExactState, FockIndex, Lambda, Mode, NumericState, RepConfig,
    SparseMatrix,
};
use qsphere::scalar::parse_rational;

fn main() {
    let q0 = parse_rational("1/2").unwrap();
    let c = RepConfig::new(2, q0, Lambda::i(), 3, Mode::Numeric).unwrap();
    let p = Presentation::sigma(2).unwrap();

    let k = FockIndex::new(vec![1, 2]);
    for text in [
        "y1",
        "y2",
        "y3",
        "y1'",
        "y2 y2'",
        "y1' y1 + y2' y2 + y3' y3",
    ] {
        let e = parse(text, &p).unwrap();
        let v = apply_element(&e, &NumericState::basis(k.clone(), &c), &c).unwrap();
        println!("{text:<24} {k} = {v}");
    }

    let exact = c.with_mode(Mode::Exact).unwrap();
    let e = parse("y2' y1'", &p).unwrap();
    let v = apply_element(&e, &ExactState::basis(k.clone(), &exact), &exact).unwrap();
    println!("exact: y2' y1' {k} = {v}");

    let small = RepConfig::numeric(1, parse_rational("1/2").unwrap(), 2).unwrap();
    let m: SparseMatrix<Complex64> = matrix(&Element::generator(Generator::y(2)), &small).unwrap();
    println!("{}", m.to_json(&small));
}
