//! Pass/fail bookkeeping shared by the verification routines.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Ordered list of named checks plus free-form notes.
///
/// A report with `skipped` set ran nothing; it neither passes nor fails a
/// run on its own.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    pub skipped: Option<String>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn skipped(reason: impl Into<String>) -> Self {
        Report { skipped: Some(reason.into()), ..Self::default() }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed, detail: detail.into() });
    }

    /// Records `expected == computed` with both values in the detail.
    pub fn check_eq<T: PartialEq + fmt::Display>(&mut self, name: impl Into<String>, expected: T, computed: T) {
        let passed = expected == computed;
        let detail = if passed { format!("{computed}") } else { format!("expected {expected}, computed {computed}") };
        self.check(name, passed, detail);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
        if let Some(s) = other.skipped {
            self.notes.push(format!("skipped: {s}"));
        }
    }

    /// No failing check.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(s) = &self.skipped {
            writeln!(f, "  skipped: {s}")?;
        }
        for c in &self.checks {
            writeln!(f, "  [{}] {}: {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
