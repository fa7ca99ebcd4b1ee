//! Command-line front end.
//!
//! [`run`] takes the argument vector and two output streams and returns the
//! process exit code: 0 on success, 1 when a requested check fails, 2 on
//! parse or domain errors. Output depends only on the arguments and the
//! `QSPHERE_FUEL` variable.

use std::ffi::OsString;
use std::io::Write;

use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num::complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{
    confluence_probe, normalize_counted, AlgebraError, Element, Kind, Presentation, DEFAULT_FUEL,
};
use crate::expr::{parse, print_canonical, ParseError};
use crate::rep::{
    apply_element, fmt_f64, matrix, yn1_spectrum, ExactAmplitude, FockIndex, Lambda, Mode,
    RepConfig, RepError, StateVector,
};
use crate::scalar::parse_q0;
use crate::verify::{run_suite, Suite, VerifyError};

/// Environment variable overriding the rewrite fuel.
pub const FUEL_VAR: &str = "QSPHERE_FUEL";

#[derive(Parser, Debug)]
#[command(
    name = "qsphere",
    version,
    about = "Normal ordering, representations and identity checks for quantum symplectic spheres"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: CliConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CliConfig {
    /// Full sphere (s) or its quotient (sigma).
    #[arg(long, global = true, value_enum, default_value = "sigma")]
    pub algebra: AlgebraArg,
    #[arg(long, global = true, default_value_t = 1)]
    pub n: u32,
    /// Deformation parameter as an exact rational p/r in (0, 1).
    #[arg(long, global = true, default_value = "1/2")]
    pub q: String,
    /// Unit complex number: 1, -1, i, -i or re,im.
    #[arg(long, global = true, default_value = "1", allow_hyphen_values = true)]
    pub lambda: String,
    /// Cutoff of every Fock index component.
    #[arg(long = "K", global = true, default_value_t = 6)]
    pub cutoff: u32,
    #[arg(long, global = true, value_enum, default_value = "on")]
    pub sphere: Switch,
    #[arg(long, global = true, value_enum, default_value = "numeric")]
    pub mode: ModeArg,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Seed of the confluence probe.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraArg {
    S,
    Sigma,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Switch {
    On,
    Off,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Numeric,
    Exact,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the normal form of an expression.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run identity checks and print one report per check.
    Verify {
        #[arg(
            long,
            default_value = "all",
            value_parser = PossibleValuesParser::new(["all", "relations", "lemma-aux", "lemma-main", "kernel", "basis"])
                .map(|s| s.parse::<Suite>().expect("listed suite"))
        )]
        suite: Suite,
    },
    /// Operators of the truncated representation.
    Rep {
        #[command(subcommand)]
        action: RepCommand,
    },
    /// Eigenvalues of the top generator, in basis order.
    Spectrum,
    /// Compare two rewrite paths on random words.
    Probe {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum RepCommand {
    /// Matrix of an element as JSON.
    Matrix {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Apply an element to a basis vector.
    Apply {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Basis index as k1,..,kn.
        #[arg(long)]
        state: String,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{err}\n{}", err.span().render(text))]
    Parse { err: ParseError, text: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("{0}")]
    Domain(String),
}

/// Parses `argv` and runs the selected command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return e.exit_code();
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn fuel() -> Result<u64, CliError> {
    match std::env::var(FUEL_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Domain(format!(
                "{FUEL_VAR} must be a nonnegative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_FUEL),
    }
}

impl CliConfig {
    fn presentation(&self) -> Result<Presentation, CliError> {
        let kind = match self.algebra {
            AlgebraArg::S => Kind::S,
            AlgebraArg::Sigma => Kind::Sigma,
        };
        Ok(Presentation::new(kind, self.n, self.sphere == Switch::On)?)
    }

    fn rep_config(&self) -> Result<RepConfig, CliError> {
        let q0 = parse_q0(&self.q).map_err(RepError::from)?;
        let lambda = Lambda::parse(&self.lambda)?;
        let mode = match self.mode {
            ModeArg::Numeric => Mode::Numeric,
            ModeArg::Exact => Mode::Exact,
        };
        Ok(RepConfig::new(self.n, q0, lambda, self.cutoff, mode)?)
    }

    /// Representations exist for the quotient algebra only.
    fn rep_presentation(&self) -> Result<Presentation, CliError> {
        if self.algebra != AlgebraArg::Sigma {
            return Err(CliError::Domain(
                "representations are defined for the quotient algebra; use --algebra sigma".into(),
            ));
        }
        self.presentation()
    }

    fn parse(&self, text: &str, p: &Presentation) -> Result<Element, CliError> {
        parse(text, p).map_err(|err| CliError::Parse {
            err,
            text: text.to_string(),
        })
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    writeln!(out, "{text}").map_err(|e| CliError::Domain(format!("cannot write output: {e}")))
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable output")
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let cfg = &cli.config;
    let json = cfg.format == Format::Json;
    // q is validated even by commands that keep it symbolic.
    parse_q0(&cfg.q).map_err(RepError::from)?;
    match &cli.command {
        Command::Normalize { expr } => {
            let p = cfg.presentation()?;
            let e = cfg.parse(expr, &p)?;
            let (nf, steps) = normalize_counted(&e, &p, fuel()?)?;
            let text = print_canonical(&nf);
            if json {
                #[derive(Serialize)]
                struct Normalized<'a> {
                    input: &'a str,
                    normal_form: String,
                    steps: u64,
                }
                emit(
                    out,
                    &to_json(&Normalized {
                        input: expr,
                        normal_form: text,
                        steps,
                    }),
                )?;
            } else {
                emit(out, &text)?;
            }
            Ok(0)
        }
        Command::Verify { suite } => {
            let p = cfg.presentation()?;
            let c = cfg.rep_config()?;
            let reports = run_suite(*suite, &p, &c, fuel()?)?;
            let passed = reports.iter().filter(|r| r.passed).count();
            if json {
                emit(out, &to_json(&reports))?;
            } else {
                for r in &reports {
                    emit(out, &r.to_string())?;
                }
                emit(out, &format!("{passed}/{} checks passed", reports.len()))?;
            }
            Ok(if passed == reports.len() { 0 } else { 1 })
        }
        Command::Rep { action } => {
            let p = cfg.rep_presentation()?;
            let c = cfg.rep_config()?;
            match action {
                RepCommand::Matrix { expr } => {
                    let e = cfg.parse(expr, &p)?;
                    let nc = c.with_mode(Mode::Numeric)?;
                    let m = matrix::<Complex64>(&e, &nc)?;
                    emit(out, &m.to_json(&nc))?;
                }
                RepCommand::Apply { expr, state } => {
                    let e = cfg.parse(expr, &p)?;
                    let k = parse_state(state, &c)?;
                    apply_and_print(&e, k, &c, json, out)?;
                }
            }
            Ok(0)
        }
        Command::Spectrum => {
            let c = cfg.rep_config()?;
            let spectrum = yn1_spectrum(&c);
            if json {
                #[derive(Serialize)]
                struct Eigen {
                    k: Vec<u32>,
                    re: f64,
                    im: f64,
                }
                let rows: Vec<Eigen> = c
                    .indices()
                    .zip(&spectrum)
                    .map(|(k, z)| Eigen {
                        k: k.components().to_vec(),
                        re: z.re,
                        im: z.im,
                    })
                    .collect();
                emit(out, &to_json(&rows))?;
            } else {
                for (k, z) in c.indices().zip(&spectrum) {
                    emit(out, &format!("{k} {} {}", fmt_f64(z.re), fmt_f64(z.im)))?;
                }
            }
            Ok(0)
        }
        Command::Probe { trials, max_len } => {
            let p = cfg.presentation()?;
            let report = confluence_probe(&p, *trials, cli.config.seed, *max_len);
            if json {
                emit(out, &to_json(&report))?;
            } else {
                emit(
                    out,
                    &format!(
                        "trials={} reducible={} discrepancies={} exhausted={} max_steps={}",
                        report.trials,
                        report.reducible_trials,
                        report.discrepancies.len(),
                        report.exhausted.len(),
                        report.max_steps
                    ),
                )?;
                for d in &report.discrepancies {
                    emit(
                        out,
                        &format!("{} at {}: {} vs {}", d.word, d.position, d.direct, d.detour),
                    )?;
                }
            }
            Ok(if report.clean() { 0 } else { 1 })
        }
    }
}

fn parse_state(text: &str, c: &RepConfig) -> Result<FockIndex, CliError> {
    let parts = text
        .split(',')
        .map(|s| s.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| {
            CliError::Domain(format!(
                "state must be a comma-separated list of nonnegative integers, got {text:?}"
            ))
        })?;
    let k = FockIndex::new(parts);
    if !c.contains(&k) {
        return Err(CliError::Domain(format!(
            "state {k} needs {} components, each at most K = {}",
            c.n(),
            c.cutoff()
        )));
    }
    Ok(k)
}

fn apply_and_print(
    e: &Element,
    k: FockIndex,
    c: &RepConfig,
    json: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    #[derive(Serialize)]
    struct Amp<T> {
        k: Vec<u32>,
        re: T,
        im: T,
    }
    match c.mode() {
        Mode::Numeric => {
            let v: StateVector<Complex64> = apply_element(e, &StateVector::basis(k, c), c)?;
            if json {
                let rows: Vec<Amp<f64>> = v
                    .iter()
                    .map(|(k, a)| Amp {
                        k: k.components().to_vec(),
                        re: a.re,
                        im: a.im,
                    })
                    .collect();
                emit(out, &to_json(&rows))
            } else {
                emit(out, &v.to_string())
            }
        }
        Mode::Exact => {
            let v: StateVector<ExactAmplitude> = apply_element(e, &StateVector::basis(k, c), c)?;
            if json {
                let rows: Vec<Amp<String>> = v
                    .iter()
                    .map(|(k, a)| Amp {
                        k: k.components().to_vec(),
                        re: a.re.to_string(),
                        im: a.im.to_string(),
                    })
                    .collect();
                emit(out, &to_json(&rows))
            } else {
                emit(out, &v.to_string())
            }
        }
    }
}
