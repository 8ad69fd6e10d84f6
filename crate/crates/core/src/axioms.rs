//! Pass/fail reports for the structural checks (coalgebra, cogroup, Hopf).

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub law: String,
    pub passed: bool,
    /// First basis element on which the law fails.
    pub failure: Option<String>,
    pub failure_degree: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub max_degree: usize,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn new(max_degree: usize) -> Self {
        AxiomReport {
            max_degree,
            checks: Vec::new(),
        }
    }

    pub fn record(&mut self, law: &str, failure: Option<(String, usize)>) {
        self.checks.push(AxiomCheck {
            law: law.to_string(),
            passed: failure.is_none(),
            failure_degree: failure.as_ref().map(|f| f.1),
            failure: failure.map(|f| f.0),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, law: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.law == law)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed: Vec<String> = self
            .failures()
            .map(|c| match (&c.failure, c.failure_degree) {
                (Some(w), Some(d)) => format!("{} at {w} (degree {d})", c.law),
                _ => c.law.clone(),
            })
            .collect();
        if failed.is_empty() {
            write!(f, "all {} checks pass up to degree {}", self.checks.len(), self.max_degree)
        } else {
            write!(f, "{}", failed.join("; "))
        }
    }
}
