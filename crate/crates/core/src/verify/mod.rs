//! A registry of named identity checks and the reports they produce.
//!
//! Each check compares one or more pairs of series; it passes when every pair
//! agrees on its window, and fails with the first discrepant coefficient
//! otherwise. Failure is data: [`run_check`] and [`run_all`] never panic on a
//! false identity.

mod checks;

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::partition::GapConfig;
use crate::series::{Discrepancy, QSeries};

pub use checks::REGISTRY;

/// Version of the report JSON layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Registry entry for one check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CheckInfo {
    pub name: &'static str,
    pub description: &'static str,
    /// Which identity or statement the check exercises.
    pub label: &'static str,
    /// Default truncation order.
    pub default_order: i64,
    /// Smallest order at which the check is meaningful; below it the check
    /// is skipped.
    pub min_order: i64,
}

/// Looks up a registry entry by name.
pub fn find(name: &str) -> Option<&'static CheckInfo> {
    REGISTRY.iter().find(|c| c.name == name)
}

/// Registered names in report order.
pub fn names() -> Vec<&'static str> {
    let mut v: Vec<_> = REGISTRY.iter().map(|c| c.name).collect();
    v.sort_unstable();
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown check {name:?}; valid names: {}", names().join(", "))]
    UnknownName { name: String },
    #[error("invalid override {key}: {reason}")]
    InvalidOverride { key: String, reason: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    /// The check could not be evaluated (an arithmetic error, not a false
    /// identity).
    Error,
}

/// The outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub discrepancy: Option<Discrepancy>,
    /// Which comparison inside the check failed, or why it was skipped.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    pub elapsed_us: u64,
}

/// A single-coefficient perturbation added to the left side of every
/// comparison made by the targeted checks. Used to test the harness itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fault {
    pub targets: Vec<String>,
    pub q_exp: i64,
    pub t_exp: i64,
    #[serde(with = "crate::bigint_string")]
    pub delta: BigInt,
}

/// Settings for a run. `None` fields fall back to each check's defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub z_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alpha: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub beta: Option<bool>,
    /// Restricts the run to these checks.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub only: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub fault: Option<Fault>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub errored: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub engine_version: String,
    pub config: RunConfig,
    pub summary: Summary,
    pub checks: Vec<CheckResult>,
}

impl Report {
    /// True when nothing failed or errored.
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0 && self.summary.errored == 0
    }

    /// A copy with all timing fields zeroed.
    pub fn without_timing(&self) -> Report {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.elapsed_us = 0;
        }
        r
    }
}

/// Typed parameters for a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    pub order: i64,
    pub z_degree: usize,
    pub alpha: Option<bool>,
    pub beta: Option<bool>,
}

impl Params {
    /// Configurations selected by the `alpha`/`beta` filters.
    pub fn configs(&self) -> Vec<GapConfig> {
        GapConfig::ALL
            .into_iter()
            .filter(|c| self.alpha.map_or(true, |a| a == c.alpha) && self.beta.map_or(true, |b| b == c.beta))
            .collect()
    }

    fn echo(&self) -> BTreeMap<String, Value> {
        let mut m = BTreeMap::new();
        m.insert("order".into(), Value::from(self.order));
        m.insert("z_degree".into(), Value::from(self.z_degree));
        m.insert(
            "configs".into(),
            Value::from(self.configs().iter().map(|c| c.to_string()).collect::<Vec<_>>()),
        );
        m
    }
}

fn parse_overrides(info: &CheckInfo, overrides: &BTreeMap<String, Value>) -> Result<Params, VerifyError> {
    let mut p = Params {
        order: info.default_order,
        z_degree: 8,
        alpha: None,
        beta: None,
    };
    let bad = |key: &str, reason: &str| VerifyError::InvalidOverride {
        key: key.to_string(),
        reason: reason.to_string(),
    };
    let flag = |key: &str, v: &Value| match v {
        Value::Bool(b) => Ok(*b),
        Value::Number(n) if n.as_u64() == Some(0) => Ok(false),
        Value::Number(n) if n.as_u64() == Some(1) => Ok(true),
        _ => Err(bad(key, "expected 0, 1 or a boolean")),
    };
    for (key, v) in overrides {
        match key.as_str() {
            "order" => p.order = v.as_i64().ok_or_else(|| bad(key, "expected an integer"))?,
            "z_degree" => {
                p.z_degree = v
                    .as_u64()
                    .ok_or_else(|| bad(key, "expected a non-negative integer"))? as usize
            }
            "alpha" => p.alpha = Some(flag(key, v)?),
            "beta" => p.beta = Some(flag(key, v)?),
            _ => return Err(bad(key, "unknown parameter")),
        }
    }
    Ok(p)
}

/// Comparison context handed to each check.
pub(crate) struct Ctx<'a> {
    fault: Option<&'a Fault>,
    failure: Option<(Discrepancy, String)>,
}

impl Ctx<'_> {
    /// Records `lhs == rhs`; only the first failing comparison is kept.
    pub(crate) fn compare(&mut self, what: impl Into<String>, lhs: &QSeries, rhs: &QSeries) {
        if self.failure.is_some() {
            return;
        }
        let perturbed;
        let lhs = match self.fault {
            Some(f) if f.q_exp >= lhs.lo() && f.q_exp < lhs.order() => {
                let mut s = lhs.clone();
                s.add_term(f.q_exp, f.t_exp, &f.delta);
                perturbed = s;
                &perturbed
            }
            _ => lhs,
        };
        if let Some(d) = lhs.first_discrepancy(rhs) {
            self.failure = Some((d, what.into()));
        }
    }
}

pub(crate) type CheckOutcome = Result<(), Box<dyn std::error::Error + Send + Sync>>;
pub(crate) type CheckFn = fn(&Params, &mut Ctx) -> CheckOutcome;

/// Runs one check by name with the given parameter overrides
/// (`order`, `z_degree`, `alpha`, `beta`).
pub fn run_check(name: &str, overrides: &BTreeMap<String, Value>) -> Result<CheckResult, VerifyError> {
    run_check_with(name, overrides, None)
}

/// [`run_check`] with an optional injected fault.
pub fn run_check_with(
    name: &str,
    overrides: &BTreeMap<String, Value>,
    fault: Option<&Fault>,
) -> Result<CheckResult, VerifyError> {
    let info = find(name).ok_or_else(|| VerifyError::UnknownName { name: name.to_string() })?;
    let params = parse_overrides(info, overrides)?;
    let start = Instant::now();
    let mut result = CheckResult {
        name: name.to_string(),
        params: params.echo(),
        status: Status::Skipped,
        discrepancy: None,
        note: None,
        elapsed_us: 0,
    };
    if params.order < info.min_order.max(1) {
        result.note = Some(format!("order {} below minimum {}", params.order, info.min_order.max(1)));
        return Ok(result);
    }
    if params.configs().is_empty() {
        result.note = Some("no configuration matches the alpha/beta filter".into());
        return Ok(result);
    }
    let targeted = fault.filter(|f| f.targets.iter().any(|t| t == name));
    let mut ctx = Ctx { fault: targeted, failure: None };
    let outcome = checks::function(name)(&params, &mut ctx);
    match (outcome, ctx.failure) {
        (Err(e), _) => {
            result.status = Status::Error;
            result.note = Some(e.to_string());
        }
        (Ok(()), Some((d, what))) => {
            result.status = Status::Fail;
            result.discrepancy = Some(d);
            result.note = Some(what);
        }
        (Ok(()), None) => result.status = Status::Pass,
    }
    result.elapsed_us = start.elapsed().as_micros() as u64;
    Ok(result)
}

/// Runs every selected check, concurrently, and collects a report ordered by
/// check name.
pub fn run_all(config: &RunConfig) -> Result<Report, VerifyError> {
    let selected: Vec<&str> = match &config.only {
        Some(list) => {
            for n in list {
                find(n).ok_or_else(|| VerifyError::UnknownName { name: n.clone() })?;
            }
            names().into_iter().filter(|n| list.iter().any(|l| l == n)).collect()
        }
        None => names(),
    };
    let mut overrides = BTreeMap::new();
    if let Some(o) = config.order {
        overrides.insert("order".to_string(), Value::from(o));
    }
    if let Some(z) = config.z_degree {
        overrides.insert("z_degree".to_string(), Value::from(z));
    }
    if let Some(a) = config.alpha {
        overrides.insert("alpha".to_string(), Value::from(a));
    }
    if let Some(b) = config.beta {
        overrides.insert("beta".to_string(), Value::from(b));
    }
    let checks = selected
        .par_iter()
        .map(|n| run_check_with(n, &overrides, config.fault.as_ref()))
        .collect::<Result<Vec<_>, _>>()?;
    let mut summary = Summary {
        total: checks.len(),
        ..Summary::default()
    };
    for c in &checks {
        match c.status {
            Status::Pass => summary.passed += 1,
            Status::Fail => summary.failed += 1,
            Status::Skipped => summary.skipped += 1,
            Status::Error => summary.errored += 1,
        }
    }
    Ok(Report {
        schema_version: SCHEMA_VERSION,
        engine_version: env!("CARGO_PKG_VERSION").to_string(),
        config: config.clone(),
        summary,
        checks,
    })
}
