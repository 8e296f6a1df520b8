//! Seeded verification harness.
//!
//! Each identity is a named check in [`REGISTRY`]. A run evaluates the selected checks
//! in parallel, each on its own random stream, and assembles a report sorted by name,
//! so a fixed [`SuiteConfig`] always serializes to the same bytes.

mod checks;
mod rng;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub use checks::REGISTRY;
pub use rng::{check_rng, fnv1a64, random_gauss, random_rational, uniform, CheckRng};

use crate::analytic::Analytic;
use crate::scalars::BigFloat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown check `{name}`; available: {}", available.join(", "))]
    UnknownCheck { name: String, available: Vec<String> },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Overrides every check's default trial count when set.
    pub trials: Option<u64>,
    pub precision: u32,
    pub order: usize,
    pub height: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { seed: 0, trials: None, precision: 192, order: 24, height: 1_000_000 }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.precision < 64 {
            return Err(VerifyError::InvalidConfig("precision must be at least 64 bits".into()));
        }
        if self.order < 2 {
            return Err(VerifyError::InvalidConfig("series order must be at least 2".into()));
        }
        if self.height < 1 {
            return Err(VerifyError::InvalidConfig("height bound must be at least 1".into()));
        }
        if self.trials == Some(0) {
            return Err(VerifyError::InvalidConfig("trials must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Exact,
    Numeric,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub kind: CheckKind,
    pub trials: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paper_flag: Option<String>,
    /// First failing input, when there is one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Overall {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub config: SuiteConfig,
    pub results: Vec<CheckResult>,
    pub overall: Overall,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn passed(&self) -> bool {
        self.overall == Overall::Pass
    }
}

/// What a check body sees.
pub struct CheckCtx<'a> {
    pub config: &'a SuiteConfig,
    pub analytic: &'a Analytic,
    pub trials: u64,
}

/// A registered identity.
pub struct CheckSpec {
    pub name: &'static str,
    pub kind: CheckKind,
    /// The identity under test, in words.
    pub statement: &'static str,
    pub default_trials: u64,
    pub run: fn(&CheckCtx, &mut CheckRng) -> Tally,
}

/// Running totals for one check.
#[derive(Debug, Default)]
pub struct Tally {
    trials: u64,
    failures: u64,
    max_error: Option<BigFloat>,
    counterexample: Option<String>,
    flag: Option<String>,
}

impl Tally {
    pub fn exact(&mut self, ok: bool, input: impl FnOnce() -> String) {
        self.trials += 1;
        if !ok {
            self.fail(input);
        }
    }

    /// Records `err`; the trial fails unless `err < tol`.
    pub fn numeric(&mut self, err: BigFloat, tol: &BigFloat, input: impl FnOnce() -> String) {
        self.trials += 1;
        let ok = &err < tol;
        if self.max_error.as_ref().is_none_or(|m| &err > m) {
            self.max_error = Some(err);
        }
        if !ok {
            self.fail(input);
        }
    }

    pub fn fail(&mut self, input: impl FnOnce() -> String) {
        self.failures += 1;
        if self.counterexample.is_none() {
            self.counterexample = Some(input());
        }
    }

    pub fn flag(&mut self, note: impl Into<String>) {
        self.flag = Some(note.into());
    }

    fn into_result(self, spec: &CheckSpec) -> CheckResult {
        let max_error = match spec.kind {
            CheckKind::Numeric => Some(self.max_error.map_or_else(|| "0".to_string(), |e| e.to_decimal_string(8))),
            CheckKind::Exact => None,
        };
        CheckResult {
            name: spec.name.to_string(),
            kind: spec.kind,
            trials: self.trials,
            failures: self.failures,
            max_error,
            paper_flag: self.flag,
            counterexample: self.counterexample,
        }
    }
}

pub fn check_names() -> Vec<&'static str> {
    let mut v: Vec<_> = REGISTRY.iter().map(|c| c.name).collect();
    v.sort_unstable();
    v
}

fn select(selection: &[String]) -> Result<Vec<&'static CheckSpec>, VerifyError> {
    if selection.is_empty() || selection.iter().any(|s| s == "all") {
        return Ok(REGISTRY.iter().collect());
    }
    let mut out = Vec::new();
    for name in selection {
        match REGISTRY.iter().find(|c| c.name == name) {
            Some(c) if !out.iter().any(|o: &&CheckSpec| o.name == c.name) => out.push(c),
            Some(_) => {}
            None => {
                return Err(VerifyError::UnknownCheck {
                    name: name.clone(),
                    available: check_names().into_iter().map(String::from).collect(),
                })
            }
        }
    }
    Ok(out)
}

/// Runs the selected checks (`"all"` or an empty selection means every check).
pub fn run_suite(config: &SuiteConfig, selection: &[String]) -> Result<Vec<CheckResult>, VerifyError> {
    config.validate()?;
    let specs = select(selection)?;
    let analytic = Analytic::new(config.precision);
    let mut results: Vec<CheckResult> = specs
        .par_iter()
        .map(|spec| {
            let ctx = CheckCtx { config, analytic: &analytic, trials: config.trials.unwrap_or(spec.default_trials) };
            let mut rng = check_rng(config.seed, spec.name);
            (spec.run)(&ctx, &mut rng).into_result(spec)
        })
        .collect();
    results.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(results)
}

pub fn run_report(config: &SuiteConfig, selection: &[String]) -> Result<Report, VerifyError> {
    let results = run_suite(config, selection)?;
    let overall = if results.iter().all(CheckResult::passed) { Overall::Pass } else { Overall::Fail };
    Ok(Report { config: config.clone(), results, overall })
}
