//! Machine-readable verification records.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

/// Default relative tolerance for inequality slacks.
pub const DEFAULT_TOL_REPORT: f64 = 1e-8;

/// Outcome of one numerical check.
///
/// `min_slack` is the smallest normalized margin `(rhs - lhs) / scale` over
/// every evaluated instance of `lhs <= rhs`; `None` when nothing was
/// evaluated. `passed` holds exactly when every hypothesis holds and
/// `min_slack >= -tol_report`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub hypotheses_satisfied: bool,
    pub min_slack: Option<f64>,
    pub samples: usize,
    pub seed: u64,
    pub passed: bool,
    pub details: Map<String, Value>,
}

impl CheckReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn failed_hypotheses(&self) -> Vec<String> {
        match self.details.get("failed_hypotheses") {
            Some(Value::Array(items)) => items.iter().filter_map(|v| v.as_str().map(str::to_owned)).collect(),
            _ => Vec::new(),
        }
    }

    pub fn detail_f64(&self, key: &str) -> Option<f64> {
        self.details.get(key).and_then(Value::as_f64)
    }
}

/// Tracks the most violated instance of a family of inequalities.
#[derive(Debug, Clone, Default)]
pub struct SlackTracker {
    min_rel: Option<f64>,
    min_abs: Option<f64>,
    worst: Option<String>,
    count: usize,
}

impl SlackTracker {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `lhs <= rhs` with scale `1 + max(|lhs|, |rhs|)`.
    pub fn observe(&mut self, lhs: f64, rhs: f64, context: impl FnOnce() -> String) {
        let scale = 1.0 + lhs.abs().max(rhs.abs());
        self.observe_scaled(lhs, rhs, scale, context);
    }

    /// Records `lhs <= rhs` with an explicit positive scale.
    pub fn observe_scaled(&mut self, lhs: f64, rhs: f64, scale: f64, context: impl FnOnce() -> String) {
        self.count += 1;
        let abs = rhs - lhs;
        let rel = if abs.is_nan() { f64::NEG_INFINITY } else { abs / scale };
        if self.min_rel.is_none_or(|m| rel < m) {
            self.min_rel = Some(rel);
            self.min_abs = Some(abs);
            self.worst = Some(context());
        }
    }

    pub fn min_slack(&self) -> Option<f64> {
        self.min_rel
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn merge(&mut self, other: SlackTracker) {
        self.count += other.count;
        if let Some(rel) = other.min_rel {
            if self.min_rel.is_none_or(|m| rel < m) {
                self.min_rel = other.min_rel;
                self.min_abs = other.min_abs;
                self.worst = other.worst;
            }
        }
    }
}

/// Incrementally assembles a [`CheckReport`].
#[derive(Debug)]
pub struct ReportBuilder {
    check: String,
    seed: u64,
    tol_report: f64,
    samples: usize,
    failed: Vec<String>,
    tracker: SlackTracker,
    details: Map<String, Value>,
}

impl ReportBuilder {
    pub fn new(check: impl Into<String>, seed: u64, tol_report: f64) -> Self {
        ReportBuilder {
            check: check.into(),
            seed,
            tol_report,
            samples: 0,
            failed: Vec::new(),
            tracker: SlackTracker::new(),
            details: Map::new(),
        }
    }

    pub fn hypothesis(&mut self, name: &str, holds: bool) -> bool {
        if !holds {
            self.failed.push(name.to_string());
        }
        holds
    }

    pub fn hypotheses_ok(&self) -> bool {
        self.failed.is_empty()
    }

    pub fn samples(&mut self, samples: usize) {
        self.samples = samples;
    }

    pub fn tracker(&mut self) -> &mut SlackTracker {
        &mut self.tracker
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.to_string(), value.into());
    }

    /// Non-finite floats become `null` so the report stays valid JSON.
    pub fn detail_f64(&mut self, key: &str, value: f64) {
        self.details.insert(key.to_string(), json_f64(value));
    }

    pub fn finish(mut self) -> CheckReport {
        let hypotheses_satisfied = self.failed.is_empty();
        let min_slack = self
            .tracker
            .min_slack()
            .map(|s| if s.is_finite() { s } else { f64::MIN });
        let passed = hypotheses_satisfied && min_slack.is_none_or(|s| s >= -self.tol_report);
        let mut details = Map::new();
        details.insert(
            "failed_hypotheses".into(),
            Value::Array(self.failed.into_iter().map(Value::String).collect()),
        );
        details.insert("tol_report".into(), json_f64(self.tol_report));
        details.insert("comparisons".into(), Value::from(self.tracker.count));
        if let Some(abs) = self.tracker.min_abs {
            details.insert("min_abs_slack".into(), json_f64(abs));
        }
        if let Some(worst) = self.tracker.worst.take() {
            details.insert("worst_case".into(), Value::String(worst));
        }
        details.append(&mut self.details);
        CheckReport {
            check: self.check,
            hypotheses_satisfied,
            min_slack,
            samples: self.samples,
            seed: self.seed,
            passed,
            details,
        }
    }
}

pub(crate) fn json_f64(v: f64) -> Value {
    serde_json::Number::from_f64(v).map_or(Value::Null, Value::Number)
}
