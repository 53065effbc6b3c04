//! Pass/fail records produced by the verification routines.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Empty on success; otherwise the first counterexample found.
    pub detail: String,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            detail: String::new(),
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: false,
            detail: detail.into(),
        }
    }

    /// Collapses a fallible check: errors become failures.
    pub fn from_result(name: impl Into<String>, r: crate::Result<Option<String>>) -> Self {
        match r {
            Ok(None) => Check::pass(name),
            Ok(Some(d)) => Check::fail(name, d),
            Err(e) => Check::fail(name, format!("error: {e}")),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "PASS {}", self.name)
        } else {
            write!(f, "FAIL {}: {}", self.name, self.detail)
        }
    }
}
