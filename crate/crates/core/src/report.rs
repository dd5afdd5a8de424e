//! Verification results and the report document emitted by the CLI.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// One checked instance. For element identities `lhs`, `rhs` and
/// `difference` are canonical renderings; for structural checks they hold the
/// observed and expected quantities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceResult {
    pub id: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub difference: String,
}

impl InstanceResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// A structural check: `observed` against `expected`, passing iff `ok`.
    pub fn check(
        id: impl Into<String>,
        ok: bool,
        observed: impl ToString,
        expected: impl ToString,
    ) -> Self {
        let observed = observed.to_string();
        let expected = expected.to_string();
        let difference = if ok {
            "0".to_string()
        } else {
            format!("{observed} != {expected}")
        };
        InstanceResult {
            id: id.into(),
            status: Status::from_bool(ok),
            lhs: observed,
            rhs: expected,
            difference,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub results: Vec<InstanceResult>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            results: Vec::new(),
        }
    }

    pub fn with_results(suite: impl Into<String>, results: Vec<InstanceResult>) -> Self {
        Self {
            suite: suite.into(),
            results,
        }
    }

    pub fn push(&mut self, r: InstanceResult) {
        self.results.push(r);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.results.extend(other.results);
    }

    pub fn total(&self) -> usize {
        self.results.len()
    }

    pub fn passed(&self) -> usize {
        self.results.iter().filter(|r| r.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.total() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &InstanceResult> {
        self.results.iter().filter(|r| !r.passed())
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let width = self.results.iter().map(|r| r.id.len()).max().unwrap_or(0);
        for r in &self.results {
            let tag = if r.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{tag}  {:<width$}  {}", r.id, r.lhs);
            if !r.passed() {
                let _ = writeln!(out, "      {:<width$}  expected: {}", "", r.rhs);
                let _ = writeln!(out, "      {:<width$}  difference: {}", "", r.difference);
            }
        }
        let _ = writeln!(
            out,
            "{}: {}/{} passed",
            self.suite,
            self.passed(),
            self.total()
        );
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSection {
    pub name: String,
    pub results: Vec<InstanceResult>,
}

/// Top-level machine-readable document for one `verify` invocation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub suite: String,
    pub parameters: BTreeMap<String, String>,
    pub sections: Vec<SuiteSection>,
    pub summary: Summary,
    pub overall_pass: bool,
}

impl ReportDocument {
    pub fn new(
        suite: &str,
        parameters: BTreeMap<String, String>,
        reports: Vec<VerificationReport>,
    ) -> Self {
        let sections: Vec<SuiteSection> = reports
            .into_iter()
            .map(|r| SuiteSection {
                name: r.suite,
                results: r.results,
            })
            .collect();
        let total = sections.iter().map(|s| s.results.len()).sum();
        let passed = sections
            .iter()
            .flat_map(|s| &s.results)
            .filter(|r| r.passed())
            .count();
        let failed = total - passed;
        ReportDocument {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            suite: suite.to_string(),
            parameters,
            sections,
            summary: Summary {
                total,
                passed,
                failed,
            },
            overall_pass: failed == 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = writeln!(out, "suite {} ({})", self.suite, params.join(", "));
        for s in &self.sections {
            let report = VerificationReport::with_results(s.name.clone(), s.results.clone());
            out.push_str(&report.render_text());
        }
        let verdict = if self.overall_pass { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{verdict}: {}/{} checks passed, {} failed",
            self.summary.passed, self.summary.total, self.summary.failed
        );
        out
    }

    pub fn exit_code(&self) -> i32 {
        if self.overall_pass {
            0
        } else {
            1
        }
    }
}
