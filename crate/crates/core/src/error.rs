use thiserror::Error;

/// Errors raised by the exact arithmetic and geometry layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
    #[error("polynomials are over different indeterminate tables")]
    TableMismatch,
    #[error("no binding for indeterminate `{0}`")]
    MissingBinding(String),
    #[error("division is not exact")]
    InexactDivision,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("degenerate construction: {0}")]
    DegenerateConstruction(&'static str),
    #[error("isogonal conjugate lies at infinity")]
    ConjugateAtInfinity,
    #[error("invalid indeterminate table: {0}")]
    InvalidTable(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
