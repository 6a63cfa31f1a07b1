use thiserror::Error;

use crate::algebra::ValidationReport;

/// Errors raised by library operations.
///
/// Invalid algebraic structures are not errors in themselves: verifiers
/// return failing reports. Errors are reserved for calls whose inputs are
/// malformed (`Usage`), whose mathematical preconditions do not hold
/// (`Precondition`), or where an internal consistency check fails
/// (`Contract`).
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("precondition failed: {message}")]
    Precondition {
        message: String,
        report: Option<Box<ValidationReport>>,
    },
    #[error("contract violation: {0}")]
    Contract(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition {
            message: msg.into(),
            report: None,
        }
    }

    pub(crate) fn with_report(msg: impl Into<String>, report: ValidationReport) -> Self {
        Error::Precondition {
            message: msg.into(),
            report: Some(Box::new(report)),
        }
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    /// The validation report attached to a precondition failure, if any.
    pub fn report(&self) -> Option<&ValidationReport> {
        match self {
            Error::Precondition { report, .. } => report.as_deref(),
            _ => None,
        }
    }
}
