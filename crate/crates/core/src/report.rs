use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Pass,
    Fail,
    Undecided,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Undecided => "UNDECIDED",
            Verdict::NotApplicable => "NOT-APPLICABLE",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubCheck {
    pub name: String,
    pub verdict: Verdict,
    pub detail: Option<String>,
    pub offending: Option<Polynomial>,
}

impl SubCheck {
    pub fn new(name: &str, verdict: Verdict) -> Self {
        SubCheck {
            name: String::from(name),
            verdict,
            detail: None,
            offending: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn with_offending(mut self, p: Polynomial) -> Self {
        self.offending = Some(p);
        self
    }
}

/// Named sub-checks plus free-form notes. The overall verdict is `FAIL` if
/// any sub-check failed, otherwise `UNDECIDED` if any is undecided, otherwise
/// `NOT-APPLICABLE` if every sub-check is, otherwise `PASS`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub checks: Vec<SubCheck>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, c: SubCheck) {
        self.checks.push(c);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn verdict(&self) -> Verdict {
        let has = |v| self.checks.iter().any(|c| c.verdict == v);
        if has(Verdict::Fail) {
            Verdict::Fail
        } else if has(Verdict::Undecided) {
            Verdict::Undecided
        } else if !self.checks.is_empty()
            && self
                .checks
                .iter()
                .all(|c| c.verdict == Verdict::NotApplicable)
        {
            Verdict::NotApplicable
        } else {
            Verdict::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict() == Verdict::Pass
    }

    pub fn check(&self, name: &str) -> Option<&SubCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Append another report's sub-checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = alloc::format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.title, self.verdict())?;
        for c in &self.checks {
            write!(f, "  [{}] {}", c.verdict, c.name)?;
            if let Some(d) = &c.detail {
                write!(f, ": {d}")?;
            }
            writeln!(f)?;
            if let Some(p) = &c.offending {
                writeln!(f, "      offending: {p}")?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
