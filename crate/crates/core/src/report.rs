//! Check reports shared by every verification suite.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Descriptive,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Descriptive => "descriptive",
        }
    }
}

/// One verified claim, with both sides rendered so a failure can be read
/// without rerunning anything.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
    pub lhs: String,
    pub rhs: String,
}

impl Check {
    pub fn new(id: impl Into<String>, ok: bool, detail: impl Into<String>, lhs: impl ToString, rhs: impl ToString) -> Self {
        Check {
            id: id.into(),
            status: Status::from_bool(ok),
            detail: detail.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    /// Compare two displayable values for equality.
    pub fn equal<T: PartialEq + ToString>(id: impl Into<String>, detail: impl Into<String>, lhs: &T, rhs: &T) -> Self {
        Self::new(id, lhs == rhs, detail, lhs.to_string(), rhs.to_string())
    }

    pub fn descriptive(id: impl Into<String>, detail: impl Into<String>, observed: impl ToString) -> Self {
        Check {
            id: id.into(),
            status: Status::Descriptive,
            detail: detail.into(),
            lhs: observed.to_string(),
            rhs: "descriptive".to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>, seed: u64) -> Self {
        CheckReport {
            suite: suite.into(),
            seed,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    /// Sort checks by id so output is independent of execution order.
    pub fn sorted(mut self) -> Self {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
        self
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// Human-readable summary, one line per check.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("[{}] {}: {}\n", c.status.label(), c.id, c.detail));
            match c.status {
                Status::Fail => out.push_str(&format!("    lhs: {}\n    rhs: {}\n", c.lhs, c.rhs)),
                Status::Descriptive => out.push_str(&format!("    observed: {}\n", c.lhs)),
                Status::Pass => {}
            }
        }
        let failed = self.failures().count();
        out.push_str(&format!(
            "suite {}: {} checks, {} failed\n",
            self.suite,
            self.checks.len(),
            failed
        ));
        out
    }
}
