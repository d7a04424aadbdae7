//! Uniform result types for the verification campaigns.

use std::fmt;

use serde::{Deserialize, Serialize};

/// How bad a finding is. Violations of proven theorems fail the process;
/// conjecture counterexamples and discrepancies against published closed
/// forms are recorded without failing.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Severity {
    TheoremViolation,
    ConjectureCounterexample,
    FormulaDiscrepancy,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Severity::TheoremViolation => write!(f, "theorem-violation"),
            Severity::ConjectureCounterexample => write!(f, "conjecture-counterexample"),
            Severity::FormulaDiscrepancy => write!(f, "formula-discrepancy"),
        }
    }
}

/// One case where expectation and measurement differ (or a noteworthy
/// confirmation, for discrepancy findings).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Finding {
    pub composition: String,
    pub size: u64,
    pub kind: String,
    pub check: String,
    pub expected: String,
    pub measured: String,
    pub severity: Severity,
}

/// Aggregated outcome of one check over a composition sweep.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub cases: u64,
    pub findings: Vec<Finding>,
    /// Free-form summary lines (class tallies, measured values, ...).
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(check: impl Into<String>) -> Self {
        Report {
            check: check.into(),
            ..Report::default()
        }
    }

    pub fn push(&mut self, finding: Finding) {
        self.findings.push(finding);
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn violations(&self) -> impl Iterator<Item = &Finding> {
        self.findings
            .iter()
            .filter(|f| f.severity == Severity::TheoremViolation)
    }

    pub fn passed(&self) -> bool {
        self.violations().next().is_none()
    }

    /// Merges another report into this one, keeping this report's name.
    pub fn absorb(&mut self, other: Report) {
        self.cases += other.cases;
        self.findings.extend(other.findings);
        self.notes.extend(other.notes);
    }

    /// Deterministic output order regardless of worker scheduling.
    pub fn sort(&mut self) {
        self.findings.sort_by(|a, b| {
            (a.size, &a.composition, &a.check, &a.kind).cmp(&(
                b.size,
                &b.composition,
                &b.check,
                &b.kind,
            ))
        });
        self.notes.sort();
    }
}

/// Runs one closure per size in parallel and merges the results in size
/// order, so output is deterministic at any worker count.
pub fn parallel_over_sizes<F>(name: &str, min_size: usize, max_size: usize, per_size: F) -> Report
where
    F: Fn(usize) -> Report + Sync,
{
    use rayon::prelude::*;
    let sizes: Vec<usize> = (min_size..=max_size).collect();
    let parts: Vec<Report> = sizes.par_iter().map(|&n| per_size(n)).collect();
    let mut report = Report::new(name);
    for part in parts {
        report.absorb(part);
    }
    report.sort();
    report
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let violations = self.violations().count();
        writeln!(
            f,
            "check {}: {} cases, {} violations, {} findings [{}]",
            self.check,
            self.cases,
            violations,
            self.findings.len() - violations,
            if self.passed() { "pass" } else { "FAIL" }
        )?;
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        for finding in &self.findings {
            writeln!(
                f,
                "  {} ({}) {} [{}]: expected {}, measured {}",
                finding.composition,
                finding.kind,
                finding.check,
                finding.severity,
                finding.expected,
                finding.measured
            )?;
        }
        Ok(())
    }
}
