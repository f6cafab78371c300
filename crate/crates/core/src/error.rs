use thiserror::Error;

/// Errors produced by the exact layer, the quadrature engine and the checkers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot add values carrying different powers of pi (pi^({left}/2) and pi^({right}/2))")]
    MixedPiPower { left: u32, right: u32 },

    #[error("computation cancelled")]
    Cancelled,

    /// The quadrature could not reach the requested tolerance. The best estimate is kept.
    #[error(
        "quadrature budget exhausted after {evaluations} evaluations: best value {value:e} with error bound {error:e}"
    )]
    BudgetExhausted {
        value: f64,
        error: f64,
        evaluations: usize,
    },

    #[error("negative radicand {radicand:e} exceeds its uncertainty {uncertainty:e}")]
    NegativeRadicand { radicand: f64, uncertainty: f64 },

    #[error("bound violated: {0}")]
    BoundViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
