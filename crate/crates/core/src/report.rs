//! Named pass/fail outcomes shared by every consistency report.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail(String),
    /// The hypotheses did not apply or the computation was out of reach.
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Check {
    pub name: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            verdict: Verdict::Pass,
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            verdict: Verdict::Fail(detail.into()),
        }
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            verdict: Verdict::Skipped(reason.into()),
        }
    }

    /// Pass when `ok`, otherwise fail with the lazily built detail.
    pub fn expect(name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> Check {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, detail())
        }
    }

    /// Turns an error from a sub-computation into a failing check.
    pub fn from_result(name: impl Into<String>, r: crate::Result<()>) -> Check {
        match r {
            Ok(()) => Check::pass(name),
            Err(e) => Check::fail(name, e.to_string()),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        matches!(self.verdict, Verdict::Fail(_))
    }
}

impl core::fmt::Display for Check {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}: {}", self.name, self.verdict)
    }
}

/// Names of the failing checks.
pub fn failures(checks: &[Check]) -> Vec<&Check> {
    checks.iter().filter(|c| c.failed()).collect()
}

/// Prefixes every check name with `scope`.
pub fn scoped(scope: &str, checks: Vec<Check>) -> Vec<Check> {
    checks
        .into_iter()
        .map(|mut c| {
            c.name = alloc::format!("{scope}: {}", c.name);
            c
        })
        .collect()
}

impl core::fmt::Display for Verdict {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Verdict::Pass => f.write_str("pass"),
            Verdict::Fail(d) => write!(f, "FAIL: {d}"),
            Verdict::Skipped(d) => write!(f, "skipped: {d}"),
        }
    }
}
