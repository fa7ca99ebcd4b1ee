//! Symbolic and numerical toolkit for the quantum symplectic sphere algebra
//! `A(S^{4n-1}_q)` and its quotient `A(Sigma^{2n+1}_q)`.
//!
//! * [`scalar`]: exact Laurent polynomials in `q` and square roots of
//!   products of `1 - q^s`.
//! * [`algebra`]: generators, words, the two presentations as rewrite
//!   systems, normal forms and the quotient map.
//! * [`expr`]: text syntax for elements.
//! * [`rep`]: the representations on truncated `l^2(N^n)`.
//! * [`verify`]: checks of the relations, power identities, operator
//!   identities, joint kernels and the lowest-weight basis.
//! * [`cli`]: the `qsphere` command.
//!
//! The `examples/` directory has one program per area:
//! `laurent_arithmetic`, `normal_ordering`, `parse_and_print`,
//! `quotient_map`, `fock_representation`, `spectrum_and_kernels`,
//! `verify_identities` and `confluence_probe`.
//!
//! ```
//! use qsphere::algebra::{normalize, Presentation, DEFAULT_FUEL};
//! use qsphere::expr::{parse, print_canonical};
//!
//! let p = Presentation::sigma(2).unwrap();
//! let e = parse("y2 y1", &p).unwrap();
//! let nf = normalize(&e, &p, DEFAULT_FUEL).unwrap();
//! assert_eq!(print_canonical(&nf), "(q^-1)*y1y2");
//! ```

pub mod algebra;
pub mod cli;
pub mod expr;
pub mod rep;
pub mod scalar;
pub mod verify;
