//! Verification reports and their JSON form.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::verify::Scenario;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// A value together with the routine that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tagged {
    pub source: String,
    pub value: i128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub quantity: String,
    pub expected: Tagged,
    pub computed: Tagged,
    pub pass: bool,
}

impl Comparison {
    pub fn new(quantity: impl Into<String>, expected: (&str, i128), computed: (&str, i128)) -> Self {
        Comparison {
            quantity: quantity.into(),
            expected: Tagged { source: expected.0.to_string(), value: expected.1 },
            computed: Tagged { source: computed.0.to_string(), value: computed.1 },
            pass: expected.1 == computed.1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageTiming {
    pub stage: String,
    pub micros: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub suite: String,
    pub label: String,
    pub scenario: Scenario,
    pub graph: String,
    pub field: String,
    pub degree: Option<u32>,
    /// Ungated scenarios are reported but never affect the exit code.
    pub gated: bool,
    pub status: Status,
    pub comparisons: Vec<Comparison>,
    pub timings: Vec<StageTiming>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationReport {
    /// The reproducible part of a report: everything but timings.
    pub fn same_numbers(&self, other: &VerificationReport) -> bool {
        self.status == other.status && self.comparisons == other.comparisons
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub ungated_fail: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub suite: String,
    pub budget: u64,
    pub seed: u64,
    pub summary: Summary,
    pub reports: Vec<VerificationReport>,
}

impl RunReport {
    pub fn new(suite: &str, budget: u64, seed: u64, reports: Vec<VerificationReport>) -> Self {
        let mut summary = Summary::default();
        for r in &reports {
            match (r.status, r.gated) {
                (Status::Pass, _) => summary.pass += 1,
                (Status::Skipped, _) => summary.skipped += 1,
                (Status::Fail, true) => summary.fail += 1,
                (Status::Fail, false) => summary.ungated_fail += 1,
            }
        }
        RunReport { suite: suite.to_string(), budget, seed, summary, reports }
    }

    /// 0 when nothing gated failed; in strict mode skips count as failures.
    pub fn exit_code(&self, strict: bool) -> u8 {
        let bad = self.summary.fail > 0 || (strict && self.summary.skipped > 0);
        u8::from(bad)
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        let width = self.reports.iter().map(|r| r.label.len()).max().unwrap_or(0);
        for r in &self.reports {
            let ok = r.comparisons.iter().filter(|c| c.pass).count();
            let millis = r.timings.iter().map(|t| t.micros).sum::<u64>() as f64 / 1e3;
            let gate = if r.gated { "" } else { " (ungated)" };
            let _ = write!(
                out,
                "{:<14} {:<7} {:<width$}  {:>3}/{:<3} {:>9.1} ms{gate}",
                r.id,
                r.status.as_str(),
                r.label,
                ok,
                r.comparisons.len(),
                millis,
            );
            if let Some(note) = &r.note {
                let _ = write!(out, "  {note}");
            }
            out.push('\n');
            for c in r.comparisons.iter().filter(|c| !c.pass) {
                let _ = writeln!(
                    out,
                    "    {}: {} = {} but {} = {}",
                    c.quantity, c.expected.source, c.expected.value, c.computed.source, c.computed.value
                );
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "{} pass, {} fail, {} skipped, {} ungated fail",
            s.pass, s.fail, s.skipped, s.ungated_fail
        );
        out
    }
}
