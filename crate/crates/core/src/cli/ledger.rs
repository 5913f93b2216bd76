//! Named checks with a status each, split into internal identities and comparisons
//! against reference values.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "MATCH")]
    Match,
    #[serde(rename = "MISMATCH")]
    Mismatch,
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "PARAM-MISMATCH")]
    ParamMismatch,
    #[serde(rename = "SKIPPED")]
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "MATCH",
            Status::Mismatch => "MISMATCH",
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ParamMismatch => "PARAM-MISMATCH",
            Status::Skipped => "SKIPPED",
        }
    }
}

/// Outcome of comparing a derived value with a reference value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    Match,
    Mismatch,
    /// Agrees only after a change of parametrization or model.
    ParamMismatch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// An identity of our own construction; only PASS or FAIL.
    Hard,
    /// Agreement with a reference value; never fails the run.
    Soft,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub kind: Kind,
    pub status: Status,
    /// Our value, recorded whenever it differs from the reference.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derived: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckLedger {
    pub checks: Vec<Check>,
}

impl CheckLedger {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn hard(&mut self, name: &str, ok: bool, detail: Option<String>) -> &Check {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(name, Kind::Hard, status, None, detail)
    }

    /// A hard check whose computation itself failed.
    pub fn hard_error(&mut self, name: &str, err: impl std::fmt::Display) -> &Check {
        self.push(name, Kind::Hard, Status::Fail, None, Some(err.to_string()))
    }

    pub fn soft(
        &mut self,
        name: &str,
        outcome: Comparison,
        derived: String,
        detail: Option<String>,
    ) -> &Check {
        let status = match outcome {
            Comparison::Match => Status::Match,
            Comparison::Mismatch => Status::Mismatch,
            Comparison::ParamMismatch => Status::ParamMismatch,
        };
        let derived = (outcome != Comparison::Match).then_some(derived);
        self.push(name, Kind::Soft, status, derived, detail)
    }

    /// A comparison that could not run because an earlier stage failed.
    pub fn skipped(&mut self, name: &str, reason: impl std::fmt::Display) -> &Check {
        self.push(
            name,
            Kind::Soft,
            Status::Skipped,
            None,
            Some(reason.to_string()),
        )
    }

    fn push(
        &mut self,
        name: &str,
        kind: Kind,
        status: Status,
        derived: Option<String>,
        detail: Option<String>,
    ) -> &Check {
        self.checks.push(Check {
            name: name.into(),
            kind,
            status,
            derived,
            detail,
        });
        self.checks.last().expect("just pushed")
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn hard_failures(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .filter(|c| c.kind == Kind::Hard && c.status != Status::Pass)
    }

    /// True iff every hard check passed.
    pub fn passed(&self) -> bool {
        self.hard_failures().next().is_none()
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Report<'a> {
            checks: &'a [Check],
            passed: bool,
        }
        super::record::to_canonical_json(&Report {
            checks: &self.checks,
            passed: self.passed(),
        })
    }
}

impl std::fmt::Display for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:<15} {}", self.status.as_str(), self.name)?;
        if let Some(detail) = &self.detail {
            write!(f, "  ({detail})")?;
        }
        Ok(())
    }
}
