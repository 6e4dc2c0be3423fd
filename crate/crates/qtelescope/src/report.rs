//! Machine-readable verification reports.
//!
//! Every checking command produces one [`VerificationReport`]: the command and
//! instance it ran, the exact options used, the tool version, and one record
//! per checked cell. A report is `ok` exactly when no cell recorded a failure.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Overall outcome of a verification run.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    /// Every check in every cell passed.
    Ok,
    /// At least one cell recorded a failure.
    Fail,
}

/// Outcome of the checks for one cell (one (n, k) pair, or one k for
/// certificate checks).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CellRecord {
    /// The a-exponent slice, absent for per-k certificate records.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    /// The telescoping index.
    pub k: usize,
    /// The weight or order cap the cell was checked under, when one applies.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_weight: Option<usize>,
    /// Number of domain elements (or compared coefficients) the cell covered.
    pub domain_size: u64,
    /// Human-readable descriptions of every detected failure; empty when ok.
    pub failures: Vec<String>,
}

impl CellRecord {
    /// True when the cell recorded no failure.
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The result of one verification command.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    /// Tool version that produced the report.
    pub version: String,
    /// The command that ran (for example `check-bijection`).
    pub command: String,
    /// The identity or instance family the command ran against.
    pub instance: String,
    /// The exact option set the run used.
    pub options: serde_json::Value,
    /// `ok` exactly when every cell passed.
    pub status: Status,
    /// Per-cell outcomes, sorted by (n, k).
    pub cells: Vec<CellRecord>,
}

impl VerificationReport {
    /// Assembles a report; the status is derived from the cells.
    pub fn new(
        command: impl Into<String>,
        instance: impl Into<String>,
        options: serde_json::Value,
        mut cells: Vec<CellRecord>,
    ) -> Self {
        cells.sort_by_key(|c| (c.n, c.k));
        let status = if cells.iter().all(CellRecord::ok) { Status::Ok } else { Status::Fail };
        VerificationReport {
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.into(),
            instance: instance.into(),
            options,
            status,
            cells,
        }
    }

    /// True when the whole run passed.
    pub fn ok(&self) -> bool {
        self.status == Status::Ok
    }

    /// Total failures across all cells.
    pub fn failure_count(&self) -> usize {
        self.cells.iter().map(|c| c.failures.len()).sum()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} {}: {}",
            self.command,
            self.instance,
            match self.status {
                Status::Ok => "ok",
                Status::Fail => "FAIL",
            }
        )?;
        for cell in &self.cells {
            let position = match cell.n {
                Some(n) => format!("n={} k={}", n, cell.k),
                None => format!("k={}", cell.k),
            };
            let cap = cell.max_weight.map(|w| format!(", cap {w}")).unwrap_or_default();
            if cell.ok() {
                writeln!(f, "  {position}: ok (size {}{cap})", cell.domain_size)?;
            } else {
                writeln!(f, "  {position}: FAIL (size {}{cap})", cell.domain_size)?;
                for failure in &cell.failures {
                    writeln!(f, "    - {failure}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        VerificationReport::new(
            "check-bijection",
            "watson",
            serde_json::json!({"n_max": 4, "k_max": 2, "max_weight": 12}),
            vec![
                CellRecord { n: Some(2), k: 0, max_weight: Some(12), domain_size: 9, failures: vec![] },
                CellRecord { n: Some(1), k: 0, max_weight: Some(12), domain_size: 4, failures: vec![] },
            ],
        )
    }

    #[test]
    fn status_follows_cells_and_cells_sort() {
        let r = sample();
        assert_eq!(r.status, Status::Ok);
        assert_eq!(r.cells[0].n, Some(1), "cells sorted by (n, k)");
        let mut bad = sample();
        bad.cells[0].failures.push("weight mismatch".into());
        let rebuilt = VerificationReport::new("c", "i", serde_json::json!({}), bad.cells);
        assert_eq!(rebuilt.status, Status::Fail);
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let json = serde_json::to_string_pretty(&r).unwrap();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(r, back);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["status"], "ok");
        assert_eq!(v["cells"][0]["n"], 1);
        assert!(v["cells"][0].get("max_weight").is_some());
    }
}
