use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{normalize_counted, Element, Presentation, Word};

/// Rewrite budget for each normalization inside the probe.
pub const PROBE_FUEL: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Discrepancy {
    pub word: String,
    pub position: usize,
    pub direct: String,
    pub detour: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct ProbeReport {
    pub trials: usize,
    /// Trials whose word had at least one reducible pair.
    pub reducible_trials: usize,
    pub discrepancies: Vec<Discrepancy>,
    /// Words on which normalization ran out of fuel.
    pub exhausted: Vec<String>,
    pub max_steps: u64,
}

impl ProbeReport {
    pub fn clean(&self) -> bool {
        self.discrepancies.is_empty() && self.exhausted.is_empty()
    }
}

pub fn random_word<R: Rng>(p: &Presentation, rng: &mut R, max_len: usize) -> Word {
    let len = rng.gen_range(1..=max_len);
    Word::new(
        (0..len)
            .map(|_| *p.generators().choose(rng).expect("nonempty"))
            .collect(),
    )
}

/// Compares the normal form of random words with the normal form reached
/// after first applying one rule at a randomly chosen reducible position.
pub fn confluence_probe(p: &Presentation, trials: usize, seed: u64, max_len: usize) -> ProbeReport {
    assert!(max_len > 0, "max_len must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ProbeReport {
        trials,
        ..Default::default()
    };
    for _ in 0..trials {
        let word = random_word(p, &mut rng, max_len);
        let positions = p.reducible_positions(&word);
        let Some(&pos) = positions.choose(&mut rng) else {
            continue;
        };
        report.reducible_trials += 1;
        let detour_start = p.rewrite_at(&word, pos).expect("reducible");
        let direct = normalize_counted(&Element::word(word.clone()), p, PROBE_FUEL);
        let detour = normalize_counted(&detour_start, p, PROBE_FUEL);
        match (direct, detour) {
            (Ok((a, sa)), Ok((b, sb))) => {
                report.max_steps = report.max_steps.max(sa).max(sb + 1);
                if a != b {
                    report.discrepancies.push(Discrepancy {
                        word: word.to_string(),
                        position: pos,
                        direct: a.to_string(),
                        detour: b.to_string(),
                    });
                }
            }
            _ => report.exhausted.push(word.to_string()),
        }
    }
    report
}
