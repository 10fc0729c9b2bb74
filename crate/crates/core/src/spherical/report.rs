use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::group::QuadratureRule;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureInfo {
    pub group: String,
    pub band_limit: usize,
    pub node_count: usize,
}

impl From<&QuadratureRule> for QuadratureInfo {
    fn from(rule: &QuadratureRule) -> Self {
        Self {
            group: rule.group().to_string(),
            band_limit: rule.band_limit(),
            node_count: rule.node_count(),
        }
    }
}

/// Outcome of one verification: the worst residual, the tolerance it was
/// held to and everything needed to replay it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub theorem: String,
    pub n: usize,
    pub tau: Option<String>,
    pub delta: Option<String>,
    pub residual: f64,
    pub verdict: bool,
    pub tolerance: f64,
    pub seed: Option<u64>,
    pub quadrature: Option<QuadratureInfo>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
}

impl Report {
    /// A report whose verdict is `residual < tolerance`.
    pub fn new(theorem: &str, n: usize, residual: f64, tolerance: f64) -> Self {
        Self {
            theorem: theorem.to_string(),
            n,
            tau: None,
            delta: None,
            residual,
            verdict: residual < tolerance,
            tolerance,
            seed: None,
            quadrature: None,
            details: BTreeMap::new(),
        }
    }

    pub fn tau(mut self, tau: impl ToString) -> Self {
        self.tau = Some(tau.to_string());
        self
    }

    pub fn delta(mut self, delta: impl ToString) -> Self {
        self.delta = Some(delta.to_string());
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn quadrature(mut self, rule: &QuadratureRule) -> Self {
        self.quadrature = Some(rule.into());
        self
    }

    pub fn detail(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    /// Records a secondary residual and folds its pass/fail into the verdict.
    pub fn sub_check(mut self, key: &str, residual: f64, tolerance: f64) -> Self {
        self.verdict &= residual < tolerance;
        self.detail(key, serde_json::json!({ "residual": residual, "tolerance": tolerance }))
    }

    /// Folds an additional boolean condition into the verdict.
    pub fn require(mut self, key: &str, ok: bool) -> Self {
        self.verdict &= ok;
        self.detail(key, ok)
    }
}
