use thiserror::Error;

/// Errors surfaced by the toolkit, grouped by how the caller should react.
///
/// `InvalidInput` is a validation failure of user-supplied data (bad JSON
/// field values, zeros outside the disk, non-power-of-two grids). `Domain`
/// and `Precondition` mean an operation was asked outside its contract;
/// `Hypothesis` means a theorem's numerical hypothesis check failed and the
/// experiment refused to run. `Numerical` is a genuine runtime failure
/// (bracket blow-up, overflow, non-finite intermediate).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("theorem hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    /// Process exit code class for the CLI: 2 parse/validation,
    /// 3 precondition or hypothesis, 4 numerical.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) => 2,
            Error::Domain(_) | Error::Precondition(_) | Error::Hypothesis(_) => 3,
            Error::Numerical(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
