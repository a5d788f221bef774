use thiserror::Error;

/// Errors produced by the algebra kernel.
#[derive(Debug, Error)]
pub enum Error {
    /// Shape or handle mismatch: wrong rank, wrong ring, wrong parent module.
    #[error("structural error: {0}")]
    Structural(String),

    /// Text did not conform to the polynomial grammar.
    #[error("parse error at position {position}: {message}")]
    Parse { message: String, position: usize },

    /// Invalid field or ring construction (composite modulus, duplicate variables, ...).
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Exterior/symmetric powers are only built up to degree 3.
    #[error("unsupported degree {0}: powers are implemented for n <= 3")]
    UnsupportedDegree(usize),

    /// Bracket powers and the certificate map need the exponent to match the
    /// field characteristic.
    #[error("unsupported characteristic: {0}")]
    UnsupportedCharacteristic(String),

    /// The reduction-step safety cap was exhausted.
    #[error("resource limit: aborted after {steps} reduction steps (cap {cap})")]
    ResourceLimit { steps: u64, cap: u64 },

    /// An internal consistency check failed (non-composing differentials, a
    /// lift that does not respect relations). Never a valid output.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    /// A verification pipeline step contradicted the expected conclusion.
    #[error("verification failed at step '{step}': {detail}")]
    VerificationFailed { step: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }
}
