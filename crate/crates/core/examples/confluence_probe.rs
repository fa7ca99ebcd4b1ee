//! Normalizes random words along two different rewrite paths and compares.

use qsphere::algebra::{confluence_probe, Kind, Presentation};

fn main() {
    for kind in [Kind::Sigma, Kind::S] {
        for n in 1..=3 {
            for sphere in [true, false] {
                let p = Presentation::new(kind, n, sphere).unwrap();
                let r = confluence_probe(&p, 500, 1, 6);
                println!(
                    "{kind:<5} n={n} sphere={:<3} trials={} reducible={} discrepancies={} max_steps={}",
                    if sphere { "on" } else { "off" },
                    r.trials,
                    r.reducible_trials,
                    r.discrepancies.len(),
                    r.max_steps
                );
            }
        }
    }
}
