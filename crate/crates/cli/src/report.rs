//! Verdict tables produced by the verification suites.

use std::fmt;

/// Outcome of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "PASS"),
            Status::Fail => write!(f, "FAIL"),
            Status::Skip => write!(f, "SKIP"),
        }
    }
}

/// One line of a report: a check id, its status, and a witness for
/// anything other than a plain pass.
#[derive(Clone, Debug)]
pub struct Entry {
    pub id: String,
    pub status: Status,
    pub witness: String,
}

/// A named list of check outcomes with summary counts.
#[derive(Clone, Debug)]
pub struct Report {
    pub suite: String,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Report {
        Report {
            suite: suite.into(),
            entries: Vec::new(),
        }
    }

    pub fn pass(&mut self, id: impl Into<String>) {
        self.entries.push(Entry {
            id: id.into(),
            status: Status::Pass,
            witness: String::new(),
        });
    }

    /// Records a failure; the witness is mandatory so every FAIL is
    /// replayable.
    pub fn fail(&mut self, id: impl Into<String>, witness: impl Into<String>) {
        let witness = witness.into();
        assert!(!witness.is_empty(), "a failure needs a witness");
        self.entries.push(Entry {
            id: id.into(),
            status: Status::Fail,
            witness,
        });
    }

    pub fn skip(&mut self, id: impl Into<String>, reason: impl Into<String>) {
        self.entries.push(Entry {
            id: id.into(),
            status: Status::Skip,
            witness: reason.into(),
        });
    }

    /// Records `pass` or `fail` depending on `ok`.
    pub fn check(&mut self, id: impl Into<String>, ok: bool, witness: impl Fn() -> String) {
        if ok {
            self.pass(id);
        } else {
            self.fail(id, witness());
        }
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn failed(&self) -> bool {
        self.entries.iter().any(|e| e.status == Status::Fail)
    }

    /// Appends another report's entries, prefixing nothing; used to stitch
    /// sub-suites together under one name.
    pub fn absorb(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("suite: {}\n", self.suite);
        for e in &self.entries {
            out.push_str(&format!("{:<4}  {}", e.status, e.id));
            if !e.witness.is_empty() {
                out.push_str(&format!("  [{}]", sanitize(&e.witness)));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "summary: {} checks, {} passed, {} failed, {} skipped\n",
            self.entries.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip),
        ));
        out
    }

    pub fn render_tsv(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                sanitize(&self.suite),
                sanitize(&e.id),
                e.status,
                sanitize(&e.witness)
            ));
        }
        out.push_str(&format!(
            "{}\tsummary\t{}\tpass={} fail={} skip={}\n",
            sanitize(&self.suite),
            if self.failed() { "FAIL" } else { "PASS" },
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip),
        ));
        out
    }
}

/// Keeps witnesses on one line and out of the tab-separated columns.
fn sanitize(s: &str) -> String {
    s.replace(['\t', '\n', '\r'], " ")
}
