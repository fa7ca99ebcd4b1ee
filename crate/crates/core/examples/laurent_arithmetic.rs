//! Exact scalars: Laurent polynomials in q, q-shifted factorials and square
//! roots of products of `1 - q^s`.

use qsphere::scalar::{parse_rational, qpochhammer, radical_canonicalize, LaurentPoly};

fn main() {
    let a: LaurentPoly = "1 - q^2".parse().unwrap();
    let b: LaurentPoly = "1 + q^2".parse().unwrap();
    println!("({a}) * ({b}) = {}", &a * &b);

    let half = parse_rational("1/2").unwrap();
    println!(
        "q^-1 at q = 1/2: {}",
        LaurentPoly::q_pow(-1).eval_exact(&half).unwrap()
    );

    let q2 = LaurentPoly::q_pow(2);
    for ell in 0..=3 {
        println!("(q^2; q^2)_{ell} = {}", qpochhammer(&q2, &q2, ell));
    }

    // sqrt(1-q^2) sqrt(1-q^4) = (1-q^2) sqrt(1+q^2)
    let r = radical_canonicalize(&[2, 4]);
    println!("sqrt(1-q^2)*sqrt(1-q^4) = {r}");
    println!("  squared: {}", r.square());
    println!("  at q = 1/2: {:.12}", r.eval(&half).unwrap());
}
