//! Run reports shared by the CLI and the acceptance suite.

use std::fmt;

use serde::Serialize;

use crate::error::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;

/// Exit code for an error that aborted a command.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Invalid(_) => EXIT_INVALID,
        Error::BudgetExceeded(_) => EXIT_BUDGET,
        Error::Precondition(_) | Error::Truncation { .. } => EXIT_PRECONDITION,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub key: String,
    pub value: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub verdicts: Vec<Verdict>,
    pub facts: Vec<Fact>,
    pub budget_events: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub exit_code_hint: i32,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport { command: command.into(), ..Default::default() }
    }

    pub fn verdict(&mut self, check: impl Into<String>, pass: bool, witness: Option<String>) -> &mut Self {
        self.verdicts.push(Verdict { check: check.into(), pass, witness });
        self.settle();
        self
    }

    pub fn fact(&mut self, key: impl Into<String>, value: impl fmt::Display) -> &mut Self {
        self.facts.push(Fact { key: key.into(), value: value.to_string() });
        self
    }

    /// Records an aborting error and sets the matching exit code.
    pub fn fail_with(&mut self, e: &Error) -> &mut Self {
        if matches!(e, Error::BudgetExceeded(_)) {
            self.budget_events.push(e.to_string());
        }
        self.error = Some(e.to_string());
        self.exit_code_hint = exit_code(e);
        self
    }

    pub fn all_pass(&self) -> bool {
        self.error.is_none() && self.verdicts.iter().all(|v| v.pass)
    }

    fn settle(&mut self) {
        if self.error.is_none() {
            self.exit_code_hint = if self.all_pass() { EXIT_PASS } else { EXIT_FAILED };
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "command: {}", self.command)?;
        for v in &self.verdicts {
            let tag = if v.pass { "PASS" } else { "FAIL" };
            match &v.witness {
                Some(w) => writeln!(f, "{tag} {}: {w}", v.check)?,
                None => writeln!(f, "{tag} {}", v.check)?,
            }
        }
        for x in &self.facts {
            writeln!(f, "{}: {}", x.key, x.value)?;
        }
        for b in &self.budget_events {
            writeln!(f, "budget: {b}")?;
        }
        if let Some(e) = &self.error {
            writeln!(f, "error: {e}")?;
        }
        write!(f, "exit: {}", self.exit_code_hint)
    }
}
