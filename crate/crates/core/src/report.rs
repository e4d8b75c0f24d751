//! Pass/fail reports produced by the verification suites.

use std::fmt;

use serde::Serialize;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "status", rename_all = "UPPERCASE")]
pub enum Outcome {
    Pass,
    Fail { witness: String },
    Skip { reason: String },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    #[serde(flatten)]
    pub outcome: Outcome,
}

impl Check {
    pub fn pass(name: impl Into<String>, cases: usize) -> Self {
        Check {
            name: name.into(),
            cases,
            outcome: Outcome::Pass,
        }
    }

    pub fn fail(name: impl Into<String>, cases: usize, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            cases,
            outcome: Outcome::Fail {
                witness: witness.into(),
            },
        }
    }

    pub fn skip(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            cases: 0,
            outcome: Outcome::Skip {
                reason: reason.into(),
            },
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self.outcome, Outcome::Fail { .. })
    }

    pub fn is_skip(&self) -> bool {
        matches!(self.outcome, Outcome::Skip { .. })
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass => write!(f, "{}: PASS cases={}", self.name, self.cases),
            Outcome::Fail { witness } => write!(f, "{}: FAIL witness={}", self.name, witness),
            Outcome::Skip { reason } => write!(f, "{}: SKIP reason={}", self.name, reason),
        }
    }
}

/// Runs `cases` and records the first counterexample, if any.
///
/// Each case yields `Ok(())` or `Err(witness)`.
pub(crate) fn run_check<I, F>(name: &str, cases: I, mut test: F) -> Check
where
    I: IntoIterator,
    F: FnMut(I::Item) -> Result<(), String>,
{
    let mut n = 0;
    for case in cases {
        n += 1;
        if let Err(w) = test(case) {
            return Check::fail(name, n, w);
        }
    }
    Check::pass(name, n)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn passed(&self) -> bool {
        !self.checks.iter().any(Check::is_fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.is_fail())
    }

    pub fn get(&self, name_prefix: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name.starts_with(name_prefix))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.title)?;
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        write!(f, "{}", if self.passed() { "RESULT: PASS" } else { "RESULT: FAIL" })
    }
}
