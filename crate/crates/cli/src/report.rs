//! The machine-readable verification report: a versioned schema wrapping
//! the case list, with field order fixed by declaration order so equal
//! runs serialize byte-identically (elapsed aside).

use std::io;
use std::path::Path;

use regdet::suite::CaseResult;
use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub suite: String,
    pub cases: Vec<CaseResult>,
    pub pass: bool,
    pub elapsed: f64,
}

impl SuiteReport {
    /// Top-level pass is the conjunction of the case passes.
    pub fn new(suite: &str, cases: Vec<CaseResult>, elapsed: f64) -> SuiteReport {
        let pass = cases.iter().all(|c| c.pass);
        SuiteReport {
            schema: 1,
            suite: suite.to_string(),
            cases,
            pass,
            elapsed,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn write_json(&self, path: &Path) -> io::Result<()> {
        std::fs::write(path, self.to_json() + "\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_suite_passes_and_round_trips() {
        let report = SuiteReport::new("symbolic", Vec::new(), 0.5);
        let json = report.to_json();
        assert!(json.contains("\"schema\": 1"));
        assert!(json.contains("\"pass\": true"));
        let back: SuiteReport = serde_json::from_str(&json).unwrap();
        assert!(back.pass && back.cases.is_empty() && back.schema == 1);
    }

    #[test]
    fn one_failing_case_fails_the_suite() {
        let case: CaseResult = serde_json::from_value(serde_json::json!({
            "name": "product-formula",
            "parameters": { "trial": 0, "m": 2 },
            "pass": false,
            "residual": 1.0
        }))
        .unwrap();
        let report = SuiteReport::new("numeric", vec![case], 0.1);
        assert!(!report.pass);
        assert!(report.to_json().contains("\"pass\": false"));
    }
}
