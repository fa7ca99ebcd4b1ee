//! Text syntax: parsing, canonical printing and error spans.

use qsphere::algebra::Presentation;
use qsphere::expr::{parse, print_canonical};

fn main() {
    let p = Presentation::s(2).unwrap();
    for text in [
        "3/2*q^-1 x1 y2'",
        "-(1 - q^2)(x1 + y1') x2'",
        "q y1 - q y1 + 2",
    ] {
        let e = parse(text, &p).unwrap();
        let printed = print_canonical(&e);
        assert_eq!(parse(&printed, &p).unwrap(), e);
        println!("{text:<26} => {printed}");
    }

    for bad in ["x1 + x3", "y1 * (q^2", "x1 ^ 2"] {
        let err = parse(bad, &p).unwrap_err();
        println!("\n{err}\n{}", err.span().render(bad));
    }
}
