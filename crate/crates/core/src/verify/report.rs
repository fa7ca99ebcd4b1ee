use std::fmt;

use serde::Serialize;

use crate::algebra::Presentation;
use crate::rep::{Mode, RepConfig};

/// Parameters a check ran with; absent fields do not apply to it.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CheckParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sphere: Option<bool>,
    #[serde(rename = "K", skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q0: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    /// Row of the lemma-main check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_max: Option<u32>,
}

impl CheckParams {
    pub fn symbolic(p: &Presentation) -> Self {
        Self {
            algebra: Some(p.kind().to_string()),
            n: p.n(),
            sphere: Some(p.sphere_reduction()),
            ..Self::default()
        }
    }

    pub fn rep(c: &RepConfig) -> Self {
        Self {
            algebra: Some("Sigma".into()),
            n: c.n(),
            cutoff: Some(c.cutoff()),
            q0: Some(format!("{}/{}", c.q0().numer(), c.q0().denom())),
            lambda: Some(c.lambda().to_string()),
            mode: Some(c.mode()),
            ..Self::default()
        }
    }
}

impl fmt::Display for CheckParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(a) = &self.algebra {
            parts.push(format!("algebra={a}"));
        }
        parts.push(format!("n={}", self.n));
        if let Some(s) = self.sphere {
            parts.push(format!("sphere={}", if s { "on" } else { "off" }));
        }
        if let Some(k) = self.cutoff {
            parts.push(format!("K={k}"));
        }
        if let Some(q) = &self.q0 {
            parts.push(format!("q={q}"));
        }
        if let Some(l) = &self.lambda {
            parts.push(format!("lambda={l}"));
        }
        if let Some(m) = self.mode {
            parts.push(format!("mode={m}"));
        }
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(m) = self.m_max {
            parts.push(format!("m_max={m}"));
        }
        f.write_str(&parts.join(" "))
    }
}

/// A failing input and its residual.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub input: String,
    pub residual: f64,
}

/// Outcome of one check.
///
/// `passed` holds iff no witness was recorded and `max_residual` stays within
/// the check's tolerance. Individual records may use a stricter tolerance than
/// the report's own, which is the loosest one the check applies.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    #[serde(rename = "check")]
    pub name: String,
    pub params: CheckParams,
    pub max_residual: f64,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
    #[serde(skip)]
    tolerance: f64,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, params: CheckParams, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            params,
            max_residual: 0.0,
            passed: true,
            witnesses: Vec::new(),
            tolerance,
        }
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Records a residual against the report's tolerance.
    pub fn record(&mut self, input: impl fmt::Display, residual: f64) {
        self.record_with(input, residual, self.tolerance);
    }

    /// Records a residual against a tolerance no looser than the report's.
    pub fn record_with(&mut self, input: impl fmt::Display, residual: f64, tol: f64) {
        debug_assert!(tol <= self.tolerance);
        if residual.is_nan() || residual > self.max_residual {
            self.max_residual = residual;
        }
        if residual.is_nan() || residual > tol {
            self.fail(input, residual);
        }
    }

    /// Records a failure regardless of the residual's size, e.g. a symbolic
    /// nonzero that happens to evaluate to something tiny.
    pub fn fail(&mut self, input: impl fmt::Display, residual: f64) {
        self.witnesses.push(Witness {
            input: input.to_string(),
            residual,
        });
        self.passed = false;
    }

    pub fn finish(mut self) -> Self {
        self.passed = self.witnesses.is_empty()
            && !self.max_residual.is_nan()
            && self.max_residual <= self.tolerance;
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} ({}) max_residual={:.3e}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.params,
            self.max_residual
        )?;
        for w in &self.witnesses {
            write!(f, "\n    {} residual={:.3e}", w.input, w.residual)?;
        }
        Ok(())
    }
}
