use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op}: argument must be a positive integer")]
    ZeroArgument { op: &'static str },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,

    #[error("content of the zero polynomial is undefined")]
    ZeroContent,

    #[error("matrix order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("{op}: {value} exceeds the supported limit {limit}")]
    GuardExceeded {
        op: &'static str,
        value: u64,
        limit: u64,
    },

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Input errors from the matrix, polynomial and certificate text formats.
///
/// Row and column numbers are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("input is not valid UTF-8")]
    InvalidUtf8,

    #[error("invalid JSON: {0}")]
    InvalidJson(String),

    #[error("expected {0}")]
    Expected(&'static str),

    #[error("row {0} is not an array")]
    RowNotArray(usize),

    #[error("empty matrix")]
    EmptyMatrix,

    #[error("ragged row {0}")]
    RaggedRow(usize),

    #[error("non-square matrix: {rows} rows, {cols} columns")]
    NonSquare { rows: usize, cols: usize },

    #[error("zero denominator at ({row},{col})")]
    ZeroDenominator { row: usize, col: usize },

    #[error("malformed token `{token}` at ({row},{col})")]
    MalformedToken {
        row: usize,
        col: usize,
        token: String,
    },

    #[error("malformed coefficient `{token}` at index {index}")]
    MalformedCoefficient { index: usize, token: String },

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
}
