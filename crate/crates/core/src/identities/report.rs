use std::fmt::Write as _;

use serde::Serialize;

use super::IdentityCheck;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Range {
    pub from: i64,
    pub to: i64,
}

/// A single mismatch. Values are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub n: i64,
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of running one identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub description: String,
    pub range: Range,
    pub status: Status,
    pub failures: Vec<Failure>,
    pub method: String,
    pub cases: usize,
    pub evaluations: usize,
    pub elapsed_ms: u64,
}

impl IdentityReport {
    pub(super) fn new(
        check: &IdentityCheck,
        range: Range,
        failures: Vec<Failure>,
        cases: usize,
        evaluations: usize,
        elapsed_ms: u64,
    ) -> Self {
        let status = if failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            id: check.id.clone(),
            description: check.description.clone(),
            range,
            status,
            failures,
            method: check.method.clone(),
            cases,
            evaluations,
            elapsed_ms,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Copy with `elapsed_ms` zeroed, for byte-stable output.
    pub fn without_timing(&self) -> Self {
        Self {
            elapsed_ms: 0,
            ..self.clone()
        }
    }
}

pub fn reports_to_json(reports: &[IdentityReport]) -> Result<String> {
    serde_json::to_string_pretty(reports).map_err(|e| Error::Usage(e.to_string()))
}

/// One row per report: `id,n_from,n_to,status,num_failures`.
pub fn reports_to_csv(reports: &[IdentityReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Usage(e.to_string());
    w.write_record(["id", "n_from", "n_to", "status", "num_failures"])
        .map_err(io)?;
    for r in reports {
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
        };
        w.write_record([
            r.id.clone(),
            r.range.from.to_string(),
            r.range.to.to_string(),
            status.to_string(),
            r.failures.len().to_string(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn reports_to_text(reports: &[IdentityReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{status} {:<16} n = {}..={}  ({} cases, {} evaluations, {} ms)",
            r.id, r.range.from, r.range.to, r.cases, r.evaluations, r.elapsed_ms
        );
        for f in &r.failures {
            let _ = writeln!(
                out,
                "    n = {} [{}]: lhs = {}, rhs = {}",
                f.n, f.case, f.lhs, f.rhs
            );
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let _ = writeln!(out, "{} checks, {} failed", reports.len(), failed);
    out
}
