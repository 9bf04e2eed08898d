//! Error and report types shared across the crate.

use std::fmt;
use thiserror::Error;

/// One violated rule, tagged with a short stable rule label plus detail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Issue {
    pub rule: String,
    pub message: String,
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.rule, self.message)
    }
}

/// A report-valued validation result: empty means valid, otherwise it lists
/// every violated invariant found.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn new() -> Self {
        ValidationReport::default()
    }

    pub fn push(&mut self, rule: &str, message: impl Into<String>) {
        self.issues.push(Issue { rule: rule.to_string(), message: message.into() });
    }

    pub fn is_empty(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.issues.extend(other.issues);
    }

    /// True if some issue carries the given rule label.
    pub fn has_rule(&self, rule: &str) -> bool {
        self.issues.iter().any(|i| i.rule == rule)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return write!(f, "ok");
        }
        for issue in &self.issues {
            writeln!(f, "{issue}")?;
        }
        Ok(())
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not composable: {0}")]
    NotComposable(String),
    #[error("degree out of range: {0}")]
    DegreeOutOfRange(String),
    #[error("range mismatch: {0}")]
    RangeMismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("elements belong to different systems")]
    MixedSystems,
    #[error("orthogonality violated: {0}")]
    NotOrthogonal(String),
    #[error("source condition violated: {0}")]
    SourceCondition(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal inconsistency (this is a bug): {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
