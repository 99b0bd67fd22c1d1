//! Outcomes of the executable checks.

use alloc::string::String;
use alloc::vec::Vec;

/// How many counterexamples a check keeps.
pub const MAX_FAILURES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// One named property checked over a number of cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub cases: u64,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    pub witnesses: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            status: Status::Pass,
            cases: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            witnesses: Vec::new(),
        }
    }

    pub fn skipped(name: impl Into<String>, why: impl Into<String>) -> Self {
        let mut c = Self::new(name);
        c.status = Status::Skipped;
        c.notes.push(why.into());
        c
    }

    /// Records one case; the description is only built on failure.
    pub fn case<D: FnOnce() -> String>(&mut self, ok: bool, describe: D) -> bool {
        self.cases += 1;
        if !ok {
            self.status = Status::Fail;
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(describe());
            }
        }
        ok
    }

    pub fn fail(&mut self, why: impl Into<String>) {
        self.status = Status::Fail;
        if self.failures.len() < MAX_FAILURES {
            self.failures.push(why.into());
        }
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }

    pub fn add_note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    /// Keeps a few sample witnesses of success.
    pub fn witness<D: FnOnce() -> String>(&mut self, describe: D) {
        if self.witnesses.len() < MAX_FAILURES {
            self.witnesses.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// The checks of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}
