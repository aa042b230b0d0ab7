//! Structured law-violation reports.
//!
//! Validators never fail fast: they walk every instance of every law and
//! collect one [`Violation`] per broken instance, each carrying the name of
//! the law and a witness (the arrows or cells it was evaluated at). Tests
//! assert on specific witnesses; the CLI serializes reports as JSON.

use serde::Serialize;
use std::fmt;

/// A single broken law instance.
#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    /// Short law identifier, e.g. `"associativity"` or `"left-action-compat"`.
    pub law: String,
    /// Human-readable witness: the arrows/objects the law failed at.
    pub witness: String,
}

/// Outcome of validating a structure: empty means every law holds.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ValidationReport {
    pub context: String,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new(context: impl Into<String>) -> Self {
        ValidationReport {
            context: context.into(),
            violations: Vec::new(),
        }
    }

    pub fn record(&mut self, law: impl Into<String>, witness: impl Into<String>) {
        self.violations.push(Violation {
            law: law.into(),
            witness: witness.into(),
        });
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// Merge another report into this one, keeping its law names.
    pub fn absorb(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    /// True if some violation mentions `law` in its law field.
    pub fn cites(&self, law: &str) -> bool {
        self.violations.iter().any(|v| v.law.contains(law))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "{}: ok", self.context);
        }
        writeln!(
            f,
            "{}: {} violation(s)",
            self.context,
            self.violations.len()
        )?;
        for v in &self.violations {
            writeln!(f, "  [{}] at {}", v.law, v.witness)?;
        }
        Ok(())
    }
}
