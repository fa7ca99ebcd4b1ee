//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the summary is always printed; exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num::complex::Complex64;
use num::traits::Pow;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qsphere::algebra::{confluence_probe, Element, Kind, Presentation, Word, PROBE_FUEL};
use qsphere::expr::{parse, print_canonical};
use qsphere::rep::{matrix, top_generator, Lambda, Mode, RepConfig, SparseMatrix};
use qsphere::scalar::{rational_to_f64, BigRational, LaurentPoly};
use qsphere::verify::{
    check_lemma_aux, check_lemma_main, check_lowest_weight_basis, check_relations_in_rep,
    check_spectrum, check_symbolic_relations, joint_kernel_dims, CheckReport,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn rational(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

const Q_GRID: [(i64, i64); 3] = [(1, 3), (1, 2), (3, 5)];

fn lambdas() -> [Lambda; 2] {
    [Lambda::one(), Lambda::i()]
}

fn require(r: &CheckReport) -> Result<f64, String> {
    if r.passed {
        Ok(r.max_residual)
    } else {
        Err(r.to_string())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    if t < limit {
        Ok(())
    } else {
        Err(format!("{what} took {t:.2?}, limit {limit:?}"))
    }
}

fn symbolic_closure() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for kind in [Kind::S, Kind::Sigma] {
        for n in 1..=3 {
            for sphere in [true, false] {
                let p = Presentation::new(kind, n, sphere).map_err(|e| e.to_string())?;
                require(&check_symbolic_relations(&p).map_err(|e| e.to_string())?)?;
                count += 1;
            }
        }
    }
    within(start, Duration::from_secs(5), "relation closure")?;
    Ok(format!(
        "{count} presentations, all residuals zero, {:.2?}",
        start.elapsed()
    ))
}

fn lemma_aux() -> Outcome {
    let start = Instant::now();
    for n in 1..=3 {
        let p = Presentation::sigma(n).map_err(|e| e.to_string())?;
        require(&check_lemma_aux(&p, 5).map_err(|e| e.to_string())?)?;
    }
    within(start, Duration::from_secs(30), "power identities")?;
    Ok(format!("n = 1..3, m <= 5, {:.2?}", start.elapsed()))
}

fn grid() -> Vec<(u32, BigRational, Lambda)> {
    let mut out = Vec::new();
    for n in 1..=2 {
        for &(a, b) in &Q_GRID {
            for lambda in lambdas() {
                out.push((n, rational(a, b), lambda));
            }
        }
    }
    out
}

fn representation_property() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for (n, q0, lambda) in grid() {
        let p = Presentation::new(Kind::Sigma, n, false).map_err(|e| e.to_string())?;
        for mode in [Mode::Exact, Mode::Numeric] {
            let c = RepConfig::new(n, q0.clone(), lambda.clone(), 6, mode)
                .map_err(|e| e.to_string())?;
            let r = check_relations_in_rep(&c, &p).map_err(|e| e.to_string())?;
            worst = worst.max(require(&r)?);
            // the sphere relation is exact on every basis vector, edge included
            let sphere = (1..=n + 1).fold(Element::zero(), |acc, i| {
                let y = qsphere::algebra::Generator::y(i);
                &acc + &Element::product_of(&[y.star(), y])
            });
            if mode == Mode::Exact {
                let m: SparseMatrix<qsphere::rep::ExactAmplitude> =
                    matrix(&sphere, &c).map_err(|e| e.to_string())?;
                let one = qsphere::rep::ExactAmplitude::real(LaurentPoly::one().into());
                let exact = m.entries().len() == c.dim()
                    && m.entries().iter().all(|(r, col, v)| r == col && *v == one);
                if !exact {
                    return Err(format!("sphere sum is not the identity for n = {n}"));
                }
            }
        }
    }
    within(start, Duration::from_secs(60), "representation grid")?;
    Ok(format!(
        "12 configurations, exact and double, max double residual {worst:.1e}, {:.2?}",
        start.elapsed()
    ))
}

fn lemma_main() -> Outcome {
    let mut worst: f64 = 0.0;
    for (n, q0, lambda) in grid() {
        let c = RepConfig::new(n, q0, lambda, 6, Mode::Exact).map_err(|e| e.to_string())?;
        for k in 1..=n {
            worst = worst.max(require(
                &check_lemma_main(&c, k).map_err(|e| e.to_string())?,
            )?);
        }
    }
    Ok(format!("max residual {worst:.1e}"))
}

fn kernel_structure() -> Outcome {
    for n in 1..=3u32 {
        for cutoff in 3..=6u32 {
            let c = RepConfig::numeric(n, rational(1, 2), cutoff).map_err(|e| e.to_string())?;
            let dims = joint_kernel_dims(&c).map_err(|e| e.to_string())?;
            let want: Vec<usize> = (1..=n).map(|k| (cutoff as usize + 1).pow(n - k)).collect();
            if dims != want {
                return Err(format!(
                    "n = {n}, K = {cutoff}: dims {dims:?}, expected {want:?}"
                ));
            }
        }
    }
    Ok("dim H_n = 1 and dim H_k = (K+1)^(n-k) for n = 1..3, K = 3..6".into())
}

fn orthonormal_basis() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 1..=2 {
        for &(a, b) in &Q_GRID {
            for mode in [Mode::Numeric, Mode::Exact] {
                let c = RepConfig::new(n, rational(a, b), Lambda::one(), 5, mode)
                    .map_err(|e| e.to_string())?;
                worst = worst.max(require(
                    &check_lowest_weight_basis(&c).map_err(|e| e.to_string())?,
                )?);
            }
        }
    }
    Ok(format!(
        "Gram matrix within {worst:.1e} of the identity, v_k = |k>"
    ))
}

fn spectrum() -> Outcome {
    for n in 1..=2u32 {
        for cutoff in 0..=6u32 {
            for &(a, b) in &Q_GRID {
                for lambda in lambdas() {
                    let q0 = rational(a, b);
                    let c = RepConfig::new(n, q0.clone(), lambda.clone(), cutoff, Mode::Numeric)
                        .map_err(|e| e.to_string())?;
                    require(&check_spectrum(&c).map_err(|e| e.to_string())?)?;
                    // independent enumeration of lambda q0^{|k| + k_n}
                    let lam = lambda.to_complex();
                    let mut want = Vec::new();
                    let side = cutoff + 1;
                    for r in 0..side.pow(n) {
                        let mut rest = r;
                        let mut ks = vec![0u32; n as usize];
                        for slot in ks.iter_mut().rev() {
                            *slot = rest % side;
                            rest /= side;
                        }
                        let e: u32 = ks.iter().sum::<u32>() + ks[n as usize - 1];
                        let qe: BigRational = Pow::pow(&q0, e);
                        want.push(lam * rational_to_f64(&qe));
                    }
                    let m: SparseMatrix = matrix(&Element::generator(top_generator(&c)), &c)
                        .map_err(|e| e.to_string())?;
                    if !m.is_diagonal() {
                        return Err("matrix of the top generator is not diagonal".into());
                    }
                    let mut got: Vec<Complex64> = (0..c.dim()).map(|r| m.get(r, r)).collect();
                    let key = |x: &Complex64, y: &Complex64| {
                        x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im))
                    };
                    got.sort_by(key);
                    want.sort_by(key);
                    if got != want {
                        return Err(format!("n = {n}, K = {cutoff}, q = {q0}: spectra differ"));
                    }
                }
            }
        }
    }
    Ok("exact multiset equality for n = 1..2, K = 0..6".into())
}

fn confluence() -> Outcome {
    let mut worst = 0;
    let mut count = 0;
    for kind in [Kind::S, Kind::Sigma] {
        for n in 1..=3 {
            for sphere in [true, false] {
                let p = Presentation::new(kind, n, sphere).map_err(|e| e.to_string())?;
                let report = confluence_probe(&p, 1000, 20 + n as u64, 6);
                if !report.clean() {
                    return Err(format!(
                        "{kind} n = {n} sphere = {sphere}: {} discrepancies, {} exhausted",
                        report.discrepancies.len(),
                        report.exhausted.len()
                    ));
                }
                worst = worst.max(report.max_steps);
                count += 1;
            }
        }
    }
    if worst >= PROBE_FUEL {
        return Err(format!("a normalization used {worst} steps"));
    }
    Ok(format!(
        "{count} presentations x 1000 trials, no discrepancies, at most {worst} steps"
    ))
}

fn random_element(p: &Presentation, rng: &mut ChaCha8Rng) -> Element {
    let gens = p.generators();
    let mut e = Element::zero();
    for _ in 0..rng.gen_range(0..=4) {
        let len = rng.gen_range(0..=5);
        let w = Word::new(
            (0..len)
                .map(|_| gens[rng.gen_range(0..gens.len())])
                .collect(),
        );
        let mut c = LaurentPoly::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let num: i64 = rng.gen_range(-9..=9);
            let den: i64 = rng.gen_range(1..=5);
            c.add_term(rng.gen_range(-6..=6), rational(num, den));
        }
        e = &e + &Element::term(c, w);
    }
    e
}

const CLI_RUNS: &[&[&str]] = &[
    &["normalize", "--algebra", "sigma", "--n", "2", "y2 y1"],
    &[
        "normalize",
        "--algebra",
        "s",
        "--n",
        "2",
        "x2 y1' x1 y2 + 3/2*q^-2 y1 y1'",
    ],
    &[
        "verify",
        "--algebra",
        "sigma",
        "--n",
        "1",
        "--q",
        "1/2",
        "--lambda",
        "1",
        "--K",
        "6",
        "--suite",
        "all",
    ],
    &[
        "verify", "--n", "2", "--q", "3/5", "--lambda", "i", "--K", "4", "--mode", "exact",
        "--format", "json",
    ],
    &[
        "rep", "matrix", "--n", "1", "--q", "1/2", "--lambda", "1", "--K", "2", "y2",
    ],
    &[
        "rep",
        "apply",
        "--n",
        "2",
        "--K",
        "4",
        "y1 y2' y1'",
        "--state",
        "1,2",
    ],
    &["spectrum", "--n", "2", "--K", "3", "--lambda", "-i"],
    &[
        "probe",
        "--algebra",
        "s",
        "--n",
        "2",
        "--trials",
        "200",
        "--seed",
        "7",
    ],
];

fn round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let presentations: Vec<Presentation> = [
        (Kind::Sigma, 1),
        (Kind::Sigma, 3),
        (Kind::S, 1),
        (Kind::S, 2),
    ]
    .iter()
    .map(|&(k, n)| Presentation::new(k, n, true).unwrap())
    .collect();
    for j in 0..500 {
        let p = &presentations[j % presentations.len()];
        let e = random_element(p, &mut rng);
        let text = print_canonical(&e);
        let back = parse(&text, p).map_err(|err| format!("{text}: {err}"))?;
        if back != e {
            return Err(format!("{text} parsed back as {}", print_canonical(&back)));
        }
    }
    let bin = env!("CARGO_BIN_EXE_qsphere");
    for args in CLI_RUNS {
        let run = || {
            Command::new(bin)
                .args(*args)
                .env_remove("QSPHERE_FUEL")
                .output()
        };
        let (a, b) = (
            run().map_err(|e| e.to_string())?,
            run().map_err(|e| e.to_string())?,
        );
        if a.stdout != b.stdout || a.stderr != b.stderr || a.status.code() != b.status.code() {
            return Err(format!("qsphere {} differs between runs", args.join(" ")));
        }
        if a.status.code() != Some(0) {
            return Err(format!(
                "qsphere {} exited with {:?}: {}",
                args.join(" "),
                a.status.code(),
                String::from_utf8_lossy(&a.stderr)
            ));
        }
    }
    Ok(format!(
        "500 elements round-trip, {} CLI invocations byte-identical",
        CLI_RUNS.len()
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("symbolic relation closure", symbolic_closure),
        ("power identities", lemma_aux),
        ("representation property", representation_property),
        ("operator identities on H_{k-1}", lemma_main),
        ("kernel structure", kernel_structure),
        ("orthonormal lowest-weight basis", orthonormal_basis),
        ("spectrum of the top generator", spectrum),
        ("confluence probe", confluence),
        ("round trip and CLI determinism", round_trip),
    ];
    let mut failed = 0;
    for (j, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!(
                "criterion {}: PASS {name} ({detail}) [{:.2?}]",
                j + 1,
                start.elapsed()
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "criterion {}: FAIL {name}: {why} [{:.2?}]",
                    j + 1,
                    start.elapsed()
                );
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
