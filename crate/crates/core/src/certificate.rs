//! Verification certificates and suite reports.
//!
//! A certificate is a deterministic function of its parameters: the same
//! inputs always produce the same document, byte for byte once serialized.
//! Parameters are kept as a sorted string map so the JSON form is canonical.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CertStatus {
    Pass,
    Fail,
    /// Preconditions were violated; nothing was compared.
    Error,
}

impl fmt::Display for CertStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CertStatus::Pass => "pass",
            CertStatus::Fail => "fail",
            CertStatus::Error => "error",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityCertificate {
    /// Which identity family was checked, e.g. "theorem3" or "twisted_shift".
    pub theorem: String,
    /// The full parameter record, exact values as strings.
    pub params: BTreeMap<String, String>,
    /// Serialized left-hand side (empty on error certificates).
    pub lhs: String,
    /// Serialized right-hand side (empty on error certificates).
    pub rhs: String,
    pub status: CertStatus,
    /// First mismatching coefficient/sample on failure, or the error detail.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_mismatch: Option<String>,
}

impl IdentityCertificate {
    pub fn passed(&self) -> bool {
        self.status == CertStatus::Pass
    }

    pub fn error(theorem: &str, params: BTreeMap<String, String>, detail: String) -> Self {
        IdentityCertificate {
            theorem: theorem.to_string(),
            params,
            lhs: String::new(),
            rhs: String::new(),
            status: CertStatus::Error,
            first_mismatch: Some(detail),
        }
    }
}

/// Convenience builder for the sorted parameter map.
pub fn params_of(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
}

impl ReportSummary {
    pub fn tally(certs: &[IdentityCertificate]) -> Self {
        let mut s = ReportSummary {
            total: certs.len(),
            ..Default::default()
        };
        for c in certs {
            match c.status {
                CertStatus::Pass => s.passed += 1,
                CertStatus::Fail => s.failed += 1,
                CertStatus::Error => s.errors += 1,
            }
        }
        s
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.errors == 0
    }
}

/// One suite's certificates plus the grid it ran over.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    /// Human-readable description of each parameter range.
    pub grid: BTreeMap<String, String>,
    pub certificates: Vec<IdentityCertificate>,
    pub summary: ReportSummary,
}

impl VerificationReport {
    pub fn new(
        suite: &str,
        grid: BTreeMap<String, String>,
        certificates: Vec<IdentityCertificate>,
    ) -> Self {
        let summary = ReportSummary::tally(&certificates);
        VerificationReport {
            suite: suite.to_string(),
            grid,
            certificates,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.all_passed()
    }
}

/// The `verify --suite all` document: every suite in canonical order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FullReport {
    pub suites: Vec<VerificationReport>,
    pub summary: ReportSummary,
}

impl FullReport {
    pub fn new(suites: Vec<VerificationReport>) -> Self {
        let mut summary = ReportSummary::default();
        for s in &suites {
            summary.total += s.summary.total;
            summary.passed += s.summary.passed;
            summary.failed += s.summary.failed;
            summary.errors += s.summary.errors;
        }
        FullReport { suites, summary }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.all_passed()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_tally() {
        let mk = |status| IdentityCertificate {
            theorem: "t".into(),
            params: BTreeMap::new(),
            lhs: "1".into(),
            rhs: "1".into(),
            status,
            first_mismatch: None,
        };
        let certs = vec![
            mk(CertStatus::Pass),
            mk(CertStatus::Fail),
            mk(CertStatus::Pass),
            mk(CertStatus::Error),
        ];
        let s = ReportSummary::tally(&certs);
        assert_eq!((s.total, s.passed, s.failed, s.errors), (4, 2, 1, 1));
        assert!(!s.all_passed());
    }

    #[test]
    fn json_round_trip_is_stable() {
        let cert = IdentityCertificate {
            theorem: "theorem1".into(),
            params: params_of(&[("d", "4".into()), ("n", "0".into())]),
            lhs: "1/2".into(),
            rhs: "1/2".into(),
            status: CertStatus::Pass,
            first_mismatch: None,
        };
        let report = VerificationReport::new("theorem1", BTreeMap::new(), vec![cert]);
        let json = serde_json::to_string_pretty(&report).unwrap();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(report, back);
        let again = serde_json::to_string_pretty(&back).unwrap();
        assert_eq!(json, again);
    }
}
