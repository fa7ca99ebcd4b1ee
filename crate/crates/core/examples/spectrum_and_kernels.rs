//! Eigenvalues of the normal generator y_{n+1} and dimensions of the joint
//! kernels of the lowering generators.

use qsphere::rep::{yn1_spectrum, Lambda, Mode, RepConfig};
use qsphere::scalar::parse_rational;
use qsphere::verify::joint_kernel_dims;

fn main() {
    let c = RepConfig::new(
        2,
        parse_rational("1/2").unwrap(),
        Lambda::one(),
        2,
        Mode::Numeric,
    )
    .unwrap();
    for (k, z) in c.indices().zip(yn1_spectrum(&c)) {
        println!("{k}  {:.6}", z.re);
    }

    for n in 1..=3 {
        let c = RepConfig::numeric(n, parse_rational("3/5").unwrap(), 4).unwrap();
        println!(
            "n = {n}, K = 4: dim H_k = {:?}",
            joint_kernel_dims(&c).unwrap()
        );
    }
}
