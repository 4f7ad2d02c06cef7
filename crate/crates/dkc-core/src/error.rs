use thiserror::Error;

/// Errors produced by the simulator.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter or configuration value is outside its valid domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// An argument fell outside the range an operation is defined on.
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    /// A result exceeds the representable floating-point range.
    #[error("overflow: {0}")]
    Overflow(String),
    /// The ODE integrator could not continue.
    #[error("integration failed at t = {t_last}: {reason}")]
    IntegrationFailure { t_last: f64, reason: String },
    /// An iterative routine exhausted its budget before reaching tolerance.
    #[error("no convergence: {0}")]
    NoConvergence(String),
    /// A root or minimum bracket did not satisfy its preconditions.
    #[error("bracketing failed: {0}")]
    Bracket(String),
    /// The scaled cloud width collapsed toward zero during the sequence.
    #[error("cloud focus crossed zero near t = {t} s")]
    FocusCrossing { t: f64 },
    /// An internal consistency check failed.
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
