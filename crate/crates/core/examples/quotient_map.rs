//! The quotient map kills x_1..x_{n-1} and renames x_n to y_{n+1}. Every
//! relation of the full sphere lands on zero in the quotient.

use qsphere::algebra::{normalize, quotient_map, Presentation, DEFAULT_FUEL};
use qsphere::expr::parse;

fn main() {
    let n = 2;
    let s = Presentation::s(n).unwrap();
    let sigma = Presentation::sigma(n).unwrap();

    let e = parse("x2 y1 + x1' y2 + x2' x2", &s).unwrap();
    println!("{e}  ->  {}", quotient_map(&e, n));

    let mut vanishing = 0;
    for rel in s.defining_relations() {
        let image = quotient_map(&rel.residual(), n);
        if normalize(&image, &sigma, DEFAULT_FUEL).unwrap().is_zero() {
            vanishing += 1;
        } else {
            println!("relation {} survives", rel.name);
        }
    }
    println!(
        "{vanishing} of {} relations map to zero",
        s.defining_relations().len()
    );
}
