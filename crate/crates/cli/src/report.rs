//! Versioned JSON report emitted by the experiment suite.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Schema tag carried by every report for downstream parsers.
pub const REPORT_SCHEMA: &str = "shiftrep-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimVerdict {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub description: String,
    pub parameters: Value,
    pub verdict: ClaimVerdict,
    pub elapsed_ms: u64,
    pub tags: Vec<String>,
    /// Witness or counterexample payload; `null` when there is none.
    pub artifact: Value,
    /// Human-readable reasons accompanying a `fail` verdict.
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub schema: String,
    pub suite: String,
    pub seed: u64,
    pub workers: usize,
    pub elapsed_ms: u64,
    pub claims: Vec<ClaimReport>,
}

impl ExperimentReport {
    /// True when no claim failed (skipped claims do not count against).
    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| c.verdict != ClaimVerdict::Fail)
    }

    pub fn failing_ids(&self) -> Vec<&str> {
        self.claims
            .iter()
            .filter(|c| c.verdict == ClaimVerdict::Fail)
            .map(|c| c.claim_id.as_str())
            .collect()
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimReport> {
        self.claims.iter().find(|c| c.claim_id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl std::fmt::Display for ClaimVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ClaimVerdict::Pass => "PASS",
            ClaimVerdict::Fail => "FAIL",
            ClaimVerdict::Skipped => "SKIPPED",
        })
    }
}
