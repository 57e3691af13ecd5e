use thiserror::Error;

/// Errors raised by the computation and certification engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("denominator divisible by modulus {0}")]
    DenominatorDivisible(u64),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("integrality violated: {0}")]
    Integrality(String),

    #[error("square-root contamination: {0}")]
    SqrtContamination(String),

    #[error("factorization failed: {0}")]
    Factorization(String),

    #[error("identity check failed: {0}")]
    Identity(String),

    #[error("degree out of range: {0}")]
    Degree(String),

    #[error("not in ideal: {0}")]
    NotInIdeal(String),

    #[error("pairing engine not configured: {0}")]
    EngineUnavailable(String),

    #[error("unknown {kind} '{name}'")]
    UnknownStrategy { kind: &'static str, name: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for violated internal assertions, as opposed to rejected input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Integrality(_)
                | Error::SqrtContamination(_)
                | Error::Factorization(_)
                | Error::Identity(_)
                | Error::InexactDivision(_)
                | Error::RingMismatch(_)
        )
    }
}
