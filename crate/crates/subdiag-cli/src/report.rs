//! Machine-readable run reports.
//!
//! Field order is fixed by declaration so identical runs serialize to
//! identical bytes, apart from `wall_time_ms`.

use serde::Serialize;

pub const SCHEMA_VERSION: &str = "1";

/// One verified claim: a measured quantity against its threshold.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    /// The mathematical claim this check certifies.
    pub anchor: String,
    pub measured: f64,
    pub threshold: f64,
    pub pass: bool,
}

impl Check {
    /// A residual-style check: passes when `measured <= threshold`.
    pub fn residual(name: &str, anchor: &str, measured: f64, threshold: f64) -> Self {
        Self {
            name: name.into(),
            anchor: anchor.into(),
            measured,
            threshold,
            pass: measured <= threshold,
        }
    }

    /// A floor-style check: passes when `measured >= threshold`.
    pub fn at_least(name: &str, anchor: &str, measured: f64, threshold: f64) -> Self {
        Self {
            name: name.into(),
            anchor: anchor.into(),
            measured,
            threshold,
            pass: measured >= threshold,
        }
    }

    /// An exact-count check: passes when `measured == threshold`.
    pub fn exact(name: &str, anchor: &str, measured: f64, threshold: f64) -> Self {
        Self {
            name: name.into(),
            anchor: anchor.into(),
            measured,
            threshold,
            pass: measured == threshold,
        }
    }
}

/// Echo of the effective run configuration.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ConfigEcho {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: &'static str,
    pub command: String,
    pub config: ConfigEcho,
    pub checks: Vec<Check>,
    pub pass: bool,
    pub wall_time_ms: f64,
}

impl Report {
    pub fn new(command: &str, config: ConfigEcho, checks: Vec<Check>, wall_time_ms: f64) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            config,
            checks,
            pass,
            wall_time_ms,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Emitted on invalid input or configuration, with exit code 2.
#[derive(Debug, Clone, Serialize)]
pub struct Diagnostic {
    pub schema_version: &'static str,
    pub command: String,
    pub error: String,
}

impl Diagnostic {
    pub fn new(command: &str, error: String) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            error,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("diagnostic serializes")
    }
}
