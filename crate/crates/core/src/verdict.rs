//! Pass/fail outcomes of axiom checks together with counterexample witnesses.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A concrete counterexample: which identity failed, on which generators,
/// and the fully expanded nonzero defect.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub check: String,
    pub location: String,
    pub defect: String,
}

impl Witness {
    pub fn new(
        check: impl Into<String>,
        location: impl Into<String>,
        defect: impl Into<String>,
    ) -> Self {
        Witness {
            check: check.into(),
            location: location.into(),
            defect: defect.into(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: defect {}", self.check, self.location, self.defect)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Pass,
    Fail(Witness),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }

    /// Runs `next` only when `self` passed; the first failure wins.
    pub fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Pass => next(),
            fail => fail,
        }
    }

    pub fn into_result(self) -> crate::Result<()> {
        match self {
            Verdict::Pass => Ok(()),
            Verdict::Fail(witness) => Err(crate::Error::Rejected { witness }),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail(w) => write!(f, "fail ({w})"),
        }
    }
}

/// One named check and its outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub verdict: Verdict,
}

/// Ordered check results plus named summaries of derived structures.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub checks: Vec<CheckResult>,
    pub notes: Vec<(String, String)>,
}

impl CheckReport {
    pub fn push(&mut self, id: impl Into<String>, verdict: Verdict) -> bool {
        let ok = verdict.passed();
        self.checks.push(CheckResult { id: id.into(), verdict });
        ok
    }

    pub fn note(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.notes.push((key.into(), value.into()));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict.passed())
    }

    /// The first failing check, if any.
    pub fn failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.verdict.passed())
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }
}

