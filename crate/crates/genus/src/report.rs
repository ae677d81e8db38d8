//! Machine-readable verification reports: a versioned JSON schema with one
//! entry per check, deterministic up to the elapsed_ms timing fields.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const REPORT_SCHEMA: &str = "genus-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "FAIL-INCONCLUSIVE")]
    FailInconclusive,
    #[serde(rename = "ERROR")]
    Error,
}

impl Status {
    /// Severity for aggregation: a report is only as good as its worst check.
    fn severity(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::FailInconclusive => 1,
            Status::Fail => 2,
            Status::Error => 3,
        }
    }

    pub fn combine(self, other: Status) -> Status {
        if other.severity() > self.severity() {
            other
        } else {
            self
        }
    }

    pub fn from_pass(pass: bool) -> Status {
        if pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::FailInconclusive => "FAIL-INCONCLUSIVE",
            Status::Error => "ERROR",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub details: BTreeMap<String, Value>,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub scenario: String,
    pub parameters: BTreeMap<String, Value>,
    pub checks: Vec<CheckResult>,
    pub overall: Status,
}

impl Report {
    pub fn new(scenario: &str, parameters: BTreeMap<String, Value>) -> Report {
        Report {
            schema: REPORT_SCHEMA.to_string(),
            scenario: scenario.to_string(),
            parameters,
            checks: Vec::new(),
            overall: Status::Pass,
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        self.overall = self.overall.combine(check.status);
        self.checks.push(check);
    }

    /// Canonical JSON: map keys sorted (BTreeMap), fixed field order,
    /// pretty-printed with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        std::fs::write(path, self.to_json())
    }

    /// The report as a JSON value with every elapsed_ms zeroed, for
    /// determinism comparisons.
    pub fn without_timings(&self) -> Value {
        let mut copy = self.clone();
        for c in &mut copy.checks {
            c.elapsed_ms = 0;
        }
        serde_json::to_value(copy).expect("report serializes")
    }

    pub fn exit_code(&self) -> i32 {
        match self.overall {
            Status::Pass => 0,
            Status::Fail | Status::Error => 1,
            Status::FailInconclusive => 3,
        }
    }
}
