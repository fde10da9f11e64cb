use thiserror::Error;

/// Errors raised by the engine's fallible operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("coefficient not finitely computable: series has a nonzero constant term")]
    NonzeroConstantTerm,

    #[error("coefficient index {index} exceeds truncation order {order}")]
    CoefficientOutOfRange { index: usize, order: usize },

    #[error("Stirling number requested with n = {n} > m = {m}")]
    StirlingOutOfRange { m: usize, n: usize },

    #[error("factored constant is undefined for the empty shape")]
    EmptyShape,

    #[error("level {0} is negative; use the iterated-exponential routine")]
    NegativeLevel(i64),

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("invalid tableau shape {0:?}")]
    ParseShape(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
