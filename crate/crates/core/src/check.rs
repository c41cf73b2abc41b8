//! Residual records produced by every battery.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::form::AltForm;
use crate::scalar::{Scalar, Tolerance};
use crate::tensor::Tensor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Hypotheses not met, or no reference data to compare against.
    Vacuous,
    /// Holds for every left-invariant input because all scalars are constant.
    AutomaticByHomogeneity,
    /// Outcome depends on a norm normalization that could not be pinned.
    ConventionSensitive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Vacuous => "vacuous",
            Status::AutomaticByHomogeneity => "automatic-by-homogeneity",
            Status::ConventionSensitive => "convention-sensitive",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One evaluated identity. `residual` is the largest absolute component of
/// `lhs - rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct Check<S> {
    pub id: String,
    pub status: Status,
    pub residual: Option<S>,
    pub note: Option<String>,
}

impl<S: Scalar> Check<S> {
    /// Passes when `residual` is zero (up to `tol` in float mode).
    pub fn zero(id: impl Into<String>, residual: S, tol: Tolerance) -> Self {
        let residual = residual.abs_value();
        let status = if residual.is_negligible(tol) {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            id: id.into(),
            status,
            residual: Some(residual),
            note: None,
        }
    }

    pub fn tensors(
        id: impl Into<String>,
        lhs: &Tensor<S>,
        rhs: &Tensor<S>,
        tol: Tolerance,
    ) -> Self {
        Self::zero(id, (lhs - rhs).max_abs(), tol)
    }

    pub fn forms(
        id: impl Into<String>,
        lhs: &AltForm<S>,
        rhs: &AltForm<S>,
        tol: Tolerance,
    ) -> Self {
        Self::zero(id, (lhs - rhs).max_abs(), tol)
    }

    pub fn scalars(id: impl Into<String>, lhs: S, rhs: S, tol: Tolerance) -> Self {
        Self::zero(id, lhs - rhs, tol)
    }

    pub fn with_status(id: impl Into<String>, status: Status, note: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            status,
            residual: None,
            note: Some(note.into()),
        }
    }

    pub fn vacuous(id: impl Into<String>, note: impl Into<String>) -> Self {
        Self::with_status(id, Status::Vacuous, note)
    }

    pub fn automatic(id: impl Into<String>, note: impl Into<String>) -> Self {
        Self::with_status(id, Status::AutomaticByHomogeneity, note)
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// A failure of an identity whose hypotheses are not met is recorded as
    /// `Vacuous`; the residual is kept for inspection.
    pub fn given(mut self, hypothesis: bool, what: &str) -> Self {
        if !hypothesis && self.failed() {
            self.status = Status::Vacuous;
            self.note = Some(format!("requires {what}"));
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Largest residual in a list, for aggregating several tensor equations
/// into one record.
pub fn max_residual<S: Scalar>(items: impl IntoIterator<Item = S>) -> S {
    items
        .into_iter()
        .map(|v| v.abs_value())
        .fold(S::zero(), |m, v| if v > m { v } else { m })
}
