use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::LinMap;

/// Outcome of a single identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    /// First basis multi-index (row-major order) where the identity fails.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

/// Ordered list of named identity checks for one structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub subject: String,
    pub checks: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new(subject: impl Into<String>) -> Self {
        CheckReport {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    /// Records whether `lhs` and `rhs` are the same map.
    pub fn compare(&mut self, name: impl Into<String>, lhs: &LinMap, rhs: &LinMap) -> bool {
        let witness = lhs.first_difference(rhs);
        let passed = witness.is_none();
        self.checks.push(CheckItem {
            name: name.into(),
            passed,
            witness,
        });
        passed
    }

    /// Records `lhs == 0`.
    pub fn vanishes(&mut self, name: impl Into<String>, lhs: &LinMap) -> bool {
        let zero = LinMap::zero(lhs.field(), lhs.domain(), lhs.codomain());
        self.compare(name, lhs, &zero)
    }

    pub fn require(&mut self, name: impl Into<String>, passed: bool, witness: Option<Vec<usize>>) -> bool {
        self.checks.push(CheckItem {
            name: name.into(),
            passed,
            witness: if passed { None } else { witness },
        });
        passed
    }

    /// Appends the checks of `other`, prefixing their names with its subject.
    pub fn absorb(&mut self, other: CheckReport) {
        for mut c in other.checks {
            c.name = format!("{}: {}", other.subject, c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn failed(&self, name: &str) -> bool {
        self.checks.iter().any(|c| !c.passed && c.name == name)
    }

    /// `Ok` if everything passed, otherwise a domain error naming the first
    /// failure.
    pub fn into_result(self) -> Result<()> {
        match self.failures().next() {
            None => Ok(()),
            Some(c) => Err(Error::Domain(format!(
                "{}: {} fails{}",
                self.subject,
                c.name,
                c.witness
                    .as_ref()
                    .map(|w| format!(" at basis index {w:?}"))
                    .unwrap_or_default()
            ))),
        }
    }
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}: {}", self.subject, if self.passed() { "pass" } else { "FAIL" })?;
        for c in &self.checks {
            write!(f, "  [{}] {}", if c.passed { "ok" } else { "!!" }, c.name)?;
            if let Some(w) = &c.witness {
                write!(f, " (witness {w:?})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
