//! Scenario manifests, theorem verifiers and property suites.

pub mod fixtures;
mod scenario;
mod suites;
mod verify;

use serde::Serialize;
use thiserror::Error;

use crate::circleindex::IndexError;
use crate::simplicial::io::FormatError;
use crate::simplicial::SimplicialError;

pub use scenario::{
    load_scenario, parse_scenario, scenario_from_file, CutFile, CutSpec, Expected, ManifoldSpec,
    Scenario, ScenarioFile, SubSpec,
};
pub use suites::{
    clifford_relations, random_invertible_symmetric, random_pair, random_rational_vector,
    run_suite, trial_rng, Reproducer, Suite, SuiteConfig, SuiteReport, DEFAULT_SEED,
    DEFAULT_TRIALS,
};
pub use verify::{
    euler_les_check, verify_closed, verify_counting, verify_cutpaste, verify_cutpaste_all,
    verify_cutpaste_scenario, CircleReport, CutPasteDetails, EulerDetails, Mode, Status, Twist,
    VerificationReport,
};

/// Input the theorem verifiers refuse.
#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "kind")]
pub enum Precondition {
    #[error("χ({complex}) = {euler}, must be 0")]
    EulerPreconditionViolated { complex: String, euler: i64 },
    #[error("dimension {0} is not of the form 4q+1")]
    DimensionNot4q1(isize),
    #[error("manifold is not orientable")]
    NotOrientable,
    #[error("manifold has boundary")]
    NotClosed,
    #[error("circle {circle} has normal rank {found}, expected {expected}")]
    CircleDimension {
        circle: usize,
        found: usize,
        expected: usize,
    },
    #[error("invalid dimension {dim} (must be 1..={max})")]
    InvalidDimension { dim: usize, max: usize },
}

impl Precondition {
    pub fn kind(&self) -> &'static str {
        match self {
            Precondition::EulerPreconditionViolated { .. } => "EulerPreconditionViolated",
            Precondition::DimensionNot4q1(_) => "DimensionNot4q1",
            Precondition::NotOrientable => "NotOrientable",
            Precondition::NotClosed => "NotClosed",
            Precondition::CircleDimension { .. } => "CircleDimension",
            Precondition::InvalidDimension { .. } => "InvalidDimension",
        }
    }
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("reading {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("ParseError: {0}")]
    Parse(String),
    #[error("ValidationError: {0}")]
    Validation(String),
    #[error("{kind}: {0}", kind = .0.kind())]
    Complex(#[from] SimplicialError),
    #[error("{kind}: {0}", kind = .0.kind())]
    Loop(#[from] IndexError),
    #[error(transparent)]
    Precondition(#[from] Precondition),
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<FormatError> for HarnessError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Io { path, source } => HarnessError::Io { path, source },
            FormatError::Json(err) => HarnessError::Parse(err.to_string()),
            FormatError::Invalid(err) => HarnessError::Complex(err),
        }
    }
}

impl HarnessError {
    /// Machine-readable error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            HarnessError::Io { .. } => "IoError",
            HarnessError::Parse(_) => "ParseError",
            HarnessError::Validation(_) => "ValidationError",
            HarnessError::Complex(e) => e.kind(),
            HarnessError::Loop(e) => e.kind(),
            HarnessError::Precondition(p) => p.kind(),
            HarnessError::Internal(_) => "InternalError",
        }
    }

    /// 2 for rejected input, 1 for internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Internal(_) => 1,
            _ => 2,
        }
    }
}
