//! Rewrite rules of both presentations and normal forms of a few elements.

use qsphere::algebra::{normalize, Kind, Presentation, DEFAULT_FUEL};
use qsphere::expr::parse;

fn main() {
    let sigma = Presentation::sigma(2).unwrap();
    println!("generators: {}", sigma.generator_range());
    println!("{} rules, for example:", sigma.rules().len());
    for rule in sigma.rules().iter().take(5) {
        println!("  {rule}    [{}]", rule.source);
    }

    for text in ["y2 y1", "y1 y1'", "y3 y1' y2", "y1' y1 + y2' y2 + y3' y3"] {
        let e = parse(text, &sigma).unwrap();
        println!(
            "{text:<28} -> {}",
            normalize(&e, &sigma, DEFAULT_FUEL).unwrap()
        );
    }

    // Without sphere reduction the diagonal pair y1' y1 survives.
    let raw = Presentation::new(Kind::Sigma, 2, false).unwrap();
    let e = parse("y1' y1 + y2' y2 + y3' y3", &raw).unwrap();
    println!("sphere off: {}", normalize(&e, &raw, DEFAULT_FUEL).unwrap());

    let s = Presentation::s(2).unwrap();
    let e = parse("x2 y1' x1", &s).unwrap();
    println!(
        "in S: x2 y1' x1 -> {}",
        normalize(&e, &s, DEFAULT_FUEL).unwrap()
    );
}
