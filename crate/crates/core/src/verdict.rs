//! Check outcomes and their aggregation.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Inapplicable,
    Conditional,
    Unknown,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Inapplicable => "INAPPLICABLE",
            Status::Conditional => "CONDITIONAL",
            Status::Unknown => "UNKNOWN",
            Status::Fail => "FAIL",
        }
    }
}

/// The result of one check. `checked` counts the individual predicate
/// evaluations behind a PASS.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evidence: Option<Value>,
}

impl Verdict {
    pub fn pass(checked: usize) -> Self {
        Verdict {
            status: Status::Pass,
            checked,
            reason: None,
            evidence: None,
        }
    }

    pub fn fail(reason: impl Into<String>, evidence: Value) -> Self {
        Verdict {
            status: Status::Fail,
            checked: 0,
            reason: Some(reason.into()),
            evidence: Some(evidence),
        }
    }

    pub fn inapplicable(reason: impl Into<String>) -> Self {
        Self::with_reason(Status::Inapplicable, reason)
    }

    pub fn unknown(reason: impl Into<String>) -> Self {
        Self::with_reason(Status::Unknown, reason)
    }

    pub fn conditional(reason: impl Into<String>) -> Self {
        Self::with_reason(Status::Conditional, reason)
    }

    fn with_reason(status: Status, reason: impl Into<String>) -> Self {
        Verdict {
            status,
            checked: 0,
            reason: Some(reason.into()),
            evidence: None,
        }
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Folds many verdicts for the same check into one.
///
/// The combined status is the worst one seen (FAIL over UNKNOWN over
/// CONDITIONAL); otherwise PASS if anything passed, else INAPPLICABLE.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
    pub unknown: usize,
    pub conditional: usize,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_fail: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_other: Option<Verdict>,
}

impl Tally {
    pub fn add(&mut self, v: Verdict) {
        match v.status {
            Status::Pass => {
                self.pass += 1;
                self.checked += v.checked;
            }
            Status::Fail => {
                self.fail += 1;
                if self.first_fail.is_none() {
                    self.first_fail = Some(v);
                }
            }
            s => {
                match s {
                    Status::Inapplicable => self.inapplicable += 1,
                    Status::Unknown => self.unknown += 1,
                    _ => self.conditional += 1,
                }
                let replace = match &self.first_other {
                    None => true,
                    Some(prev) => prev.status < s,
                };
                if replace {
                    self.first_other = Some(v);
                }
            }
        }
    }

    pub fn merge(&mut self, other: &Tally) {
        self.pass += other.pass;
        self.fail += other.fail;
        self.inapplicable += other.inapplicable;
        self.unknown += other.unknown;
        self.conditional += other.conditional;
        self.checked += other.checked;
        if self.first_fail.is_none() {
            self.first_fail.clone_from(&other.first_fail);
        }
        if let Some(o) = &other.first_other {
            let replace = match &self.first_other {
                None => true,
                Some(prev) => prev.status < o.status,
            };
            if replace {
                self.first_other = Some(o.clone());
            }
        }
    }

    pub fn status(&self) -> Status {
        if self.fail > 0 {
            Status::Fail
        } else if self.unknown > 0 {
            Status::Unknown
        } else if self.conditional > 0 {
            Status::Conditional
        } else if self.pass > 0 {
            Status::Pass
        } else {
            Status::Inapplicable
        }
    }

    /// The folded verdict.
    pub fn verdict(&self) -> Verdict {
        match self.status() {
            Status::Fail => self.first_fail.clone().expect("fail recorded"),
            Status::Pass => Verdict::pass(self.checked),
            Status::Inapplicable => self
                .first_other
                .clone()
                .unwrap_or_else(|| Verdict::inapplicable("no instance")),
            _ => self.first_other.clone().expect("status recorded"),
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.inapplicable + self.unknown + self.conditional
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn folding_prefers_worst() {
        let mut t = Tally::default();
        assert_eq!(t.status(), Status::Inapplicable);
        t.add(Verdict::pass(3));
        t.add(Verdict::inapplicable("gate"));
        assert_eq!(t.status(), Status::Pass);
        assert_eq!(t.verdict().checked, 3);
        t.add(Verdict::unknown("budget"));
        assert_eq!(t.status(), Status::Unknown);
        t.add(Verdict::fail("bad", serde_json::json!({"x": 1})));
        assert_eq!(t.status(), Status::Fail);
        assert_eq!(t.verdict().reason.as_deref(), Some("bad"));
        let mut u = Tally::default();
        u.merge(&t);
        assert_eq!(u, t);
    }
}
