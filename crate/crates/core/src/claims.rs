//! Structured results for exact claim sweeps.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Verified,
    Discrepant,
    Error,
}

/// What the catalog says should happen. A few claims are carried in their
/// original printed form although that form is wrong; those are expected to
/// come out Discrepant, and a run is only healthy if they do.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Expectation {
    Pass,
    Discrepant,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Failure {
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
    pub difference: String,
}

pub const MAX_RECORDED_FAILURES: usize = 12;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim: String,
    /// stable semantic anchor for the statement being checked
    pub source: String,
    pub mode: String,
    pub params: String,
    pub instances: u64,
    pub failure_count: u64,
    /// first few failures, as rendered expressions
    pub failures: Vec<Failure>,
    pub verdict: Verdict,
    pub expected: Expectation,
    /// true iff verdict is what the catalog expects
    pub as_expected: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl ClaimReport {
    pub fn summary_line(&self) -> String {
        let status = if self.as_expected { "ok" } else { "UNEXPECTED" };
        format!(
            "{:<28} {:<44} instances={:<6} verdict={:?} expected={:?} [{}]",
            self.claim, self.params, self.instances, self.verdict, self.expected, status
        )
    }
}
