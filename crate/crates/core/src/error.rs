use thiserror::Error;

/// Errors raised by the algebra, sequence and audit layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// The divisor (or the complex part used by the dual-complex conjugation)
    /// has no inverse in the coefficient ring.
    #[error("non-invertible: {0}")]
    NonInvertible(&'static str),

    #[error("malformed range: {lo} > {hi}")]
    InvalidRange { lo: i64, hi: i64 },

    /// A closed-form evaluation produced a non-integral component.
    #[error("non-integral component {component} at n = {n}: {value}")]
    NonIntegral {
        n: i64,
        component: &'static str,
        value: String,
    },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("assignment for `{id}` is outside its domain: {reason}")]
    OutOfDomain { id: String, reason: String },

    #[error("empty grid for `{0}`")]
    EmptyGrid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
