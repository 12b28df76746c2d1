use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_ok(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Status::Pass
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// Outcome of a sweep: the values of `n` at which the check failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub n_max: u64,
    pub status: Status,
    pub counterexamples: Vec<u64>,
    /// A description of the first failure, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, n_max: u64, counterexamples: Vec<u64>, detail: Option<String>) -> Self {
        CheckReport {
            check: check.into(),
            n_max,
            status: Status::from_ok(counterexamples.is_empty()),
            counterexamples,
            detail,
        }
    }

    pub fn passed(&self) -> bool {
        self.status.is_pass()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} (n <= {})", self.status, self.check, self.n_max)?;
        if !self.counterexamples.is_empty() {
            let shown: Vec<String> = self.counterexamples.iter().take(10).map(u64::to_string).collect();
            write!(f, " counterexamples: {}", shown.join(", "))?;
            if self.counterexamples.len() > 10 {
                write!(f, ", ... ({} total)", self.counterexamples.len())?;
            }
        }
        if let Some(d) = &self.detail {
            write!(f, "; {d}")?;
        }
        Ok(())
    }
}

/// Collects failing `n` and remembers the first description.
#[derive(Default)]
pub(crate) struct Failures {
    pub ns: Vec<u64>,
    pub first: Option<String>,
}

impl Failures {
    pub fn record(&mut self, n: u64, what: impl FnOnce() -> String) {
        if self.ns.last() != Some(&n) {
            self.ns.push(n);
        }
        if self.first.is_none() {
            self.first = Some(what());
        }
    }

    pub fn into_report(self, check: impl Into<String>, n_max: u64) -> CheckReport {
        CheckReport::new(check, n_max, self.ns, self.first)
    }
}
