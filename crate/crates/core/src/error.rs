use thiserror::Error;

use crate::exact::ExactInt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The accumulated error bound straddles a rounding boundary.
    #[error("rounding undecidable: value lies within {error_bound} of a rounding boundary; raise frac_digits")]
    RoundingUndecidable { error_bound: String },

    #[error("no convergence detected within {max_terms} terms")]
    NoConvergence { max_terms: u64 },

    #[error("{operation} does not support formula {formula}")]
    UnsupportedFormula {
        operation: &'static str,
        formula: String,
    },

    #[error("insufficient reference precision for diameter {diameter}")]
    InsufficientPrecision { diameter: ExactInt },

    #[error("cannot decode `{token}`: {reason}")]
    Decode { token: String, reason: String },

    #[error("lexicon line {line}: {reason}")]
    Lexicon { line: usize, reason: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn decode(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Decode {
            token: token.into(),
            reason: reason.into(),
        }
    }
}
