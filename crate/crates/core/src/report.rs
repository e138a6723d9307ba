//! Structured results of identity, implication and constant checks.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportKind {
    Identity,
    Implication,
    Constant,
}

/// One offending coefficient, sample or trial.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trial: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub power: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub margin: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<f64>,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub note: String,
}

impl Violation {
    pub fn note(note: impl Into<String>) -> Self {
        Self { trial: None, power: None, z: None, w: None, margin: None, error: None, note: note.into() }
    }

    pub fn coefficient(power: usize, error: f64) -> Self {
        Self { power: Some(power), error: Some(error), ..Self::note("") }
    }

    pub fn sample(trial: usize, z: Complex64, w: Complex64, margin: f64) -> Self {
        Self {
            trial: Some(trial),
            z: Some([z.re, z.im]),
            w: Some([w.re, w.im]),
            margin: Some(margin),
            ..Self::note("")
        }
    }
}

/// A named sub-check: a computed value against a reference at a tolerance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Detail {
    pub name: String,
    pub computed: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
}

/// Extremes seen by a sampled implication trial.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MarginSummary {
    /// Smallest hypothesis margin among trials whose hypothesis held.
    pub hypothesis_min: Option<f64>,
    /// Smallest conclusion margin among those trials.
    pub conclusion_min: Option<f64>,
    /// Trials skipped because the hypothesis failed or held too narrowly.
    pub skipped: usize,
    /// Reverse-containment heuristic, present only when requested. Never
    /// affects `pass`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub superordination: Option<SuperordinationSummary>,
}

/// Counts from the non-rigorous reversed containment check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuperordinationSummary {
    pub note: String,
    pub premise_held: usize,
    pub conclusion_held: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub kind: ReportKind,
    pub pass: bool,
    /// Set on checks that document a known inconsistency: the report is
    /// expected to fail, and the suite treats a failure as the correct outcome.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub expected_failure: bool,
    pub max_error: Option<f64>,
    pub violations: Vec<Violation>,
    pub samples_tested: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis_hold_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<Detail>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub margins: Option<MarginSummary>,
    pub config_echo: serde_json::Value,
}

/// Cap on the number of violations kept in a report.
pub const MAX_VIOLATIONS: usize = 32;

impl VerificationReport {
    pub fn new(id: impl Into<String>, kind: ReportKind) -> Self {
        Self {
            id: id.into(),
            kind,
            pass: true,
            expected_failure: false,
            max_error: None,
            violations: Vec::new(),
            samples_tested: 0,
            hypothesis_hold_count: None,
            details: Vec::new(),
            margins: None,
            config_echo: serde_json::Value::Null,
        }
    }

    /// Folds an error measurement into `max_error`, failing the report (and
    /// recording where) when it exceeds `tol`.
    pub fn record_error(&mut self, error: f64, tol: f64, at: impl FnOnce() -> Violation) {
        self.samples_tested += 1;
        let current = self.max_error.unwrap_or(0.0);
        // NaN must fail, so compare with the negated predicate.
        self.max_error = Some(if error > current || error.is_nan() { error } else { current });
        if !(error <= tol) {
            self.fail(at());
        }
    }

    pub fn fail(&mut self, violation: Violation) {
        self.pass = false;
        if self.violations.len() < MAX_VIOLATIONS {
            self.violations.push(violation);
        }
    }

    pub fn push_detail(&mut self, name: impl Into<String>, computed: f64, reference: Option<f64>, tolerance: f64) {
        let pass = match reference {
            Some(r) => (computed - r).abs() <= tolerance,
            None => computed.abs() <= tolerance,
        };
        if !pass {
            self.pass = false;
        }
        self.details.push(Detail { name: name.into(), computed, reference, tolerance, pass });
    }

    /// Whether the report has the outcome the suite wants: a pass, or a
    /// failure of a documented inconsistency.
    pub fn as_expected(&self) -> bool {
        self.pass != self.expected_failure
    }
}
