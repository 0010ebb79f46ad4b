use thiserror::Error;

use crate::ladders::Diagnostic;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LadderError {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown variable {0} for this term order")]
    UnknownVariable(String),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("index out of bounds: {0}")]
    OutOfBounds(String),
    #[error("row and column selections differ in size ({rows} vs {cols})")]
    SizeMismatch { rows: usize, cols: usize },
    #[error("pfaffian needs an even number of distinct increasing indices, got {0:?}")]
    BadPfaffianIndices(Vec<usize>),
    #[error("invalid ladder: {0}")]
    InvalidLadder(Diagnostic),
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("monomial ideal is not squarefree")]
    NotSquarefree,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("budget exhausted: {0}")]
    Budget(String),
}

pub type Result<T> = std::result::Result<T, LadderError>;
