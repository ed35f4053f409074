use thiserror::Error;

/// Crate-wide error type. The CLI maps variants onto exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("usage error: {0}")]
    Usage(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("minimal polynomial is reducible: extended Euclid found a zero divisor")]
    ReducibleMinPoly,

    #[error("conjugation is only defined over the rationals or a cyclotomic field")]
    UnsupportedConjugation,

    #[error("element '{element}' does not preserve the module: {detail}")]
    Invariance { element: String, detail: String },

    #[error("containment failure: {0}")]
    Containment(String),

    #[error("column {column} is not in the image of the matrix")]
    NotInImage { column: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("computation exceeded its time budget")]
    Timeout,

    #[error("internal invariant violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
