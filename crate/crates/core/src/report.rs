//! Named pass/fail checks shared by every verifier.

use serde::Serialize;

/// One comparison: `lhs` is what was measured, `rhs` what it must equal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub lhs: i128,
    pub rhs: i128,
}

impl Check {
    pub fn equal(name: impl Into<String>, lhs: i128, rhs: i128) -> Self {
        Check {
            name: name.into(),
            passed: lhs == rhs,
            lhs,
            rhs,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn equal(&mut self, name: impl Into<String>, lhs: impl Into<i128>, rhs: impl Into<i128>) {
        self.push(Check::equal(name, lhs.into(), rhs.into()));
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Looks a check up by exact name.
    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}
