//! Runs every check on a small instance and prints the reports, then one
//! report as JSON.

use qsphere::algebra::Presentation;
use qsphere::rep::{Lambda, Mode, RepConfig};
use qsphere::scalar::parse_rational;
use qsphere::verify::{check_lemma_main, run_suite_default, Suite};

fn main() {
    let p = Presentation::sigma(2).unwrap();
    let c = RepConfig::new(
        2,
        parse_rational("3/5").unwrap(),
        Lambda::i(),
        5,
        Mode::Exact,
    )
    .unwrap();
    for report in run_suite_default(Suite::All, &p, &c).unwrap() {
        println!("{report}");
    }

    let numeric = c.with_mode(Mode::Numeric).unwrap();
    let report = check_lemma_main(&numeric, 2).unwrap();
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
