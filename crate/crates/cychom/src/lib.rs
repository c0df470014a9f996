//! Command-line driver for the `cychom-core` kernels: input parsing, object
//! presets, job execution and report rendering.

pub mod input;
pub mod objects;
pub mod report;
pub mod run;

use cychom_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(format!("bad JSON: {e}"))
    }
}

impl CliError {
    /// 1 when a verification failed, 2 for bad input, 3 when over budget.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::BudgetExceeded { .. }) => 3,
            CliError::Core(
                Error::RelationFailure(_)
                | Error::NotAChainMap(_)
                | Error::NotAComplex(_)
                | Error::SignCheckFailed(..)
                | Error::MatrixMismatch(_),
            ) => 1,
            _ => 2,
        }
    }
}
