use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("expected exactly one root in the interval, found {0}")]
    RootCount(usize),
    #[error("denominator vanishes identically: {0}")]
    ZeroDenominator(String),
    #[error("path does not realize the shift vector: {0}")]
    PathMismatch(String),
    #[error("data outside the supported domain: {0}")]
    Domain(String),
    #[error("formula inapplicable: {0}")]
    Inapplicable(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("numeric evaluation failed: {0}")]
    Numeric(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
