use std::fmt::Write;

use serde::Serialize;

use super::claims::{ClaimResult, Status};

/// No refutations or timeouts.
pub const EXIT_OK: i32 = 0;
/// Solver and oracle disagree, or some other internal inconsistency.
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_REFUTED: i32 = 10;
pub const EXIT_TIMEOUT: i32 = 20;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub confirmed: usize,
    pub refuted: usize,
    pub unsupported: usize,
    pub timeout: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub version: String,
    pub results: Vec<ClaimResult>,
    pub summary: Summary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl Report {
    /// Sorts `results` by claim and params and tallies the summary.
    pub fn new(suite: &str, mut results: Vec<ClaimResult>) -> Report {
        results.sort_by(|a, b| (a.claim, &a.params).cmp(&(b.claim, &b.params)));
        let mut summary = Summary::default();
        for r in &results {
            match r.status {
                Status::Confirmed => summary.confirmed += 1,
                Status::Refuted => summary.refuted += 1,
                Status::Unsupported => summary.unsupported += 1,
                Status::Timeout => summary.timeout += 1,
            }
        }
        Report {
            suite: suite.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            results,
            summary,
        }
    }

    /// Timeouts take precedence over refutations: a run with undecided
    /// instances is incomplete whatever else it found.
    pub fn exit_code(&self) -> i32 {
        if self.summary.timeout > 0 {
            EXIT_TIMEOUT
        } else if self.summary.refuted > 0 {
            EXIT_REFUTED
        } else {
            EXIT_OK
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<18} {:<48} {:>7} {:>6} {:<11} {:>9}  notes",
            "claim", "params", "formula", "solver", "status", "seconds"
        );
        for r in &self.results {
            let solver = r.solver.map_or_else(|| "-".to_string(), |v| v.to_string());
            let _ = writeln!(
                out,
                "{:<18} {:<48} {:>7} {:>6} {:<11} {:>9.3}  {}",
                r.claim.name(),
                r.params.to_string(),
                r.formula,
                solver,
                r.status.to_string(),
                r.seconds,
                r.notes
            );
        }
        let s = self.summary;
        let _ = writeln!(
            out,
            "{} instances: {} confirmed, {} refuted, {} unsupported, {} timeout",
            self.results.len(),
            s.confirmed,
            s.refuted,
            s.unsupported,
            s.timeout
        );
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }
}

/// Serializes a report in the requested format.
pub fn emit_report(r: &Report, format: Format) -> String {
    r.render(format)
}
