use std::io;
use std::path::PathBuf;

use serde::Serialize;
use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    /// `verify` ran and found the partition unfair.
    pub const UNFAIR: i32 = 1;
    pub const INVALID_INPUT: i32 = 2;
    pub const ODD_N: i32 = 3;
    pub const NUMERICAL_FAILURE: i32 = 4;
    pub const THEOREM_VIOLATION: i32 = 5;
}

#[derive(Debug, Error)]
pub enum AppError {
    #[error("{0}")]
    InvalidInput(String),
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error(
        "partition is not fair: max dough deviation {dough:e}, max topping deviation {topping:e}, tolerance {tol:e}"
    )]
    Unfair { dough: f64, topping: f64, tol: f64 },
    #[error(transparent)]
    Core(#[from] pizza_core::Error),
}

impl From<pizza_core::GeomError> for AppError {
    fn from(e: pizza_core::GeomError) -> Self {
        AppError::InvalidInput(e.to_string())
    }
}

impl AppError {
    pub fn exit_code(&self) -> i32 {
        use pizza_core::Error as E;
        match self {
            AppError::InvalidInput(_) | AppError::Read { .. } | AppError::Write { .. } => exit::INVALID_INPUT,
            AppError::Unfair { .. } => exit::NUMERICAL_FAILURE,
            AppError::Core(e) => match e {
                E::InvalidArgument(_) | E::Geom(_) => exit::INVALID_INPUT,
                E::OddN(_) => exit::ODD_N,
                E::NotConverged { .. } | E::NumericalFailure(_) => exit::NUMERICAL_FAILURE,
                E::TheoremViolation { .. } | E::WitnessFailure { .. } => exit::THEOREM_VIOLATION,
            },
        }
    }

    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        use pizza_core::Error as E;
        match self {
            AppError::InvalidInput(_) => "invalid_input",
            AppError::Read { .. } => "read_failure",
            AppError::Write { .. } => "write_failure",
            AppError::Unfair { .. } => "unfair_partition",
            AppError::Core(e) => match e {
                E::InvalidArgument(_) => "invalid_argument",
                E::Geom(_) => "invalid_geometry",
                E::OddN(_) => "odd_n",
                E::NotConverged { .. } => "not_converged",
                E::NumericalFailure(_) => "numerical_failure",
                E::TheoremViolation { .. } => "theorem_violation",
                E::WitnessFailure { .. } => "witness_failure",
            },
        }
    }

    pub fn report(&self) -> ErrorReport {
        ErrorReport {
            format_version: crate::FORMAT_VERSION,
            error: self.kind(),
            message: self.to_string(),
            exit_code: self.exit_code(),
        }
    }
}

/// Contents of `error.json`.
#[derive(Debug, Clone, Serialize)]
pub struct ErrorReport {
    pub format_version: &'static str,
    pub error: &'static str,
    pub message: String,
    pub exit_code: i32,
}
