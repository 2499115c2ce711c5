use std::fmt::{self, Write as _};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::{Assignment, Expected, GridOverrides};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// No counterexample was found for an identity expected to fail.
    Anomaly,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Anomaly => "ANOMALY",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunInfo {
    pub grid: GridOverrides,
    pub evaluations: u64,
    pub wall_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditResult {
    pub id: String,
    pub status: Status,
    pub expected: Expected,
    pub domain: IndexMap<String, [i64; 2]>,
    pub evaluations: u64,
    pub first_counterexample: Option<Assignment>,
    pub residual: Option<[String; 4]>,
    pub note: String,
}

impl AuditResult {
    pub fn matches_expectation(&self) -> bool {
        matches!(
            (self.status, self.expected),
            (Status::Pass, Expected::Holds) | (Status::Fail, Expected::FailsAsPrinted)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub run: RunInfo,
    pub results: Vec<AuditResult>,
}

impl AuditReport {
    pub fn all_as_expected(&self) -> bool {
        self.results.iter().all(AuditResult::matches_expectation)
    }

    /// Process exit status: 0 when every result matches its expectation.
    pub fn exit_code(&self) -> i32 {
        if self.all_as_expected() {
            0
        } else {
            1
        }
    }

    pub fn result(&self, id: &str) -> Option<&AuditResult> {
        self.results.iter().find(|r| r.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

fn counterexample(r: &AuditResult) -> String {
    r.first_counterexample
        .as_ref()
        .map_or_else(|| "-".to_owned(), Assignment::to_string)
}

fn residual(r: &AuditResult) -> String {
    r.residual
        .as_ref()
        .map_or_else(|| "-".to_owned(), |c| format!("[{}]", c.join(", ")))
}

pub fn render_plain(report: &AuditReport) -> String {
    let id_w = report
        .results
        .iter()
        .map(|r| r.id.len())
        .max()
        .unwrap_or(2)
        .max(2);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<id_w$}  {:<7}  {:<16}  {:>7}  {:<16}  residual",
        "id", "status", "expected", "points", "counterexample"
    );
    for r in &report.results {
        let _ = writeln!(
            out,
            "{:<id_w$}  {:<7}  {:<16}  {:>7}  {:<16}  {}",
            r.id,
            r.status.to_string(),
            r.expected.to_string(),
            r.evaluations,
            counterexample(r),
            residual(r)
        );
    }
    let matched = report
        .results
        .iter()
        .filter(|r| r.matches_expectation())
        .count();
    let _ = writeln!(
        out,
        "{matched}/{} as expected, {} evaluations, {} ms",
        report.results.len(),
        report.run.evaluations,
        report.run.wall_ms
    );
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

pub fn render_csv(report: &AuditReport) -> String {
    let mut out =
        String::from("id,status,expected,evaluations,first_counterexample,re,im,du,imdu\n");
    for r in &report.results {
        let comps = r
            .residual
            .clone()
            .unwrap_or_else(|| ["0".into(), "0".into(), "0".into(), "0".into()]);
        let ce = r
            .first_counterexample
            .as_ref()
            .map(Assignment::to_string)
            .unwrap_or_default();
        let row = [
            r.id.clone(),
            r.status.to_string(),
            r.expected.to_string(),
            r.evaluations.to_string(),
            ce,
        ]
        .into_iter()
        .chain(comps)
        .map(|f| csv_field(&f))
        .collect::<Vec<_>>()
        .join(",");
        out.push_str(&row);
        out.push('\n');
    }
    out
}
