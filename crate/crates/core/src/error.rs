use thiserror::Error;

/// Crate-wide error type.
///
/// `InvalidParams` covers every precondition violation on user-supplied
/// values; the remaining variants report numerical failures.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("quadrature failure: error estimate {error_estimate:.3e} after max refinement, partial value {partial:.12e}")]
    QuadratureFailure { partial: f64, error_estimate: f64 },

    #[error("degenerate profile: {0}")]
    DegenerateProfile(String),

    #[error("tilde-branch only: {0}")]
    TildeBranchOnly(String),

    #[error("unbounded supremum: {0}")]
    Unbounded(String),

    #[error("linear solve failed at step {step}: {reason}")]
    SolverFailure { step: usize, reason: String },

    #[error("extrapolation did not converge: {0}")]
    ExtrapolationFailure(String),
}

impl Error {
    /// True for errors caused by invalid inputs rather than numerics.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidParams(_) | Error::TildeBranchOnly(_) | Error::DegenerateProfile(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
