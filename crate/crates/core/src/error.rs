use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Caller supplied inconsistent or incomplete input (mismatched symbol
    /// lists, missing assignments, unknown names).
    #[error("usage error: {0}")]
    Usage(String),
    /// Input lies outside the domain of a geometric or analytic formula.
    #[error("domain error: {0}")]
    Domain(String),
    /// An internal checkpoint of a derivation failed. This always indicates
    /// a bug in the derivation, never bad input.
    #[error("structural error at step `{step}`: {detail}")]
    Structural { step: String, detail: String },
    /// An exhaustive search would exceed the configured candidate budget.
    #[error("budget exceeded: {required} candidates required, budget is {budget}")]
    Budget { required: u128, budget: u128 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn structural(step: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Structural {
            step: step.into(),
            detail: detail.into(),
        }
    }
}
