use std::io::Write;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;

use super::spec::{Backing, CheckSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Unsupported,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Unsupported => "UNSUPPORTED",
        }
    }
}

/// The outcome of one check. `lhs` and `rhs` hold the two computed sides
/// (polynomials as coefficient arrays, counts as integers).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub spec: CheckSpec,
    pub status: Status,
    pub backing: Backing,
    pub lhs: Value,
    pub rhs: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub millis: u64,
}

impl CheckReport {
    pub fn new(spec: CheckSpec, pass: bool, lhs: Value, rhs: Value) -> Self {
        let backing = spec.check.backing();
        Self {
            spec,
            status: if pass { Status::Pass } else { Status::Fail },
            backing,
            lhs,
            rhs,
            counterexample: None,
            note: None,
            millis: 0,
        }
    }

    pub fn unsupported(spec: CheckSpec, reason: String) -> Self {
        let backing = spec.check.backing();
        Self {
            spec,
            status: Status::Unsupported,
            backing,
            lhs: Value::Null,
            rhs: Value::Null,
            counterexample: None,
            note: Some(reason),
            millis: 0,
        }
    }

    pub fn with_counterexample(mut self, payload: Value) -> Self {
        if self.status == Status::Fail {
            self.counterexample = Some(payload);
        }
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// The report with wall time zeroed, for byte-level comparisons.
    pub fn untimed(&self) -> Self {
        Self {
            millis: 0,
            ..self.clone()
        }
    }

    /// One human-readable line.
    pub fn line(&self) -> String {
        let mut s = format!("{} {} {}", self.status.as_str(), self.spec.check, self.spec.params());
        if self.status != Status::Pass {
            s.push_str(&format!(" lhs={} rhs={}", self.lhs, self.rhs));
        }
        if let Some(n) = &self.note {
            s.push_str(&format!(" ({n})"));
        }
        s.trim_end().to_string()
    }
}

/// Pass/fail counts over a list of reports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub unsupported: usize,
    pub theorem_failures: usize,
    pub conjecture_failures: usize,
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Self {
        let mut s = Summary {
            total: reports.len(),
            ..Default::default()
        };
        for r in reports {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Unsupported => s.unsupported += 1,
                Status::Fail => {
                    s.fail += 1;
                    match r.backing {
                        Backing::Theorem => s.theorem_failures += 1,
                        Backing::Conjecture => s.conjecture_failures += 1,
                    }
                }
            }
        }
        s
    }

    /// 3 on a theorem-backed failure, 1 on a conjecture failure, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.theorem_failures > 0 {
            3
        } else if self.conjecture_failures > 0 {
            1
        } else {
            0
        }
    }
}

/// Summary table with columns `check, params, status, lhs, rhs, millis`.
pub fn write_summary_csv<W: Write>(reports: &[CheckReport], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["check", "params", "status", "lhs", "rhs", "millis"])
        .map_err(csv_err)?;
    for r in reports {
        w.write_record([
            r.spec.check.name().to_string(),
            r.spec.params(),
            r.status.as_str().to_string(),
            r.lhs.to_string(),
            r.rhs.to_string(),
            r.millis.to_string(),
        ])
        .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

fn csv_err(e: csv::Error) -> crate::error::Error {
    crate::error::Error::Io(std::io::Error::other(e))
}
