use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("truth table length {0} is not a power of two >= 2")]
    BadLength(usize),
    #[error("illegal character {ch:?} at position {pos} (expected 0, 1 or *)")]
    BadChar { ch: char, pos: usize },
    #[error("{n} variables exceeds the supported maximum of {max}")]
    TooManyVariables { n: usize, max: usize },
    #[error("operation requires a total function but the table is partial")]
    PartialTable,
    #[error("variable index {index} out of range 1..={n}")]
    VariableOutOfRange { index: usize, n: usize },
    #[error("invalid transform: {0}")]
    BadTransform(String),
    #[error("function has an empty domain")]
    EmptyDomain,
    #[error("function is constant on its domain (zero queries suffice)")]
    ConstantFunction,
    #[error("input {x} out of range for n = {n}")]
    InputOutOfRange { x: usize, n: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix {0} is not unitary")]
    NotUnitary(usize),
    #[error("invalid measurement: {0}")]
    BadMeasurement(String),
    #[error("operation requires a one-query circuit, got T = {0}")]
    NotOneQuery(usize),
    #[error("classification {0} admits no one-query circuit")]
    NotSynthesizable(String),
    #[error("no Deutsch-Jozsa promise for n = {0} (need even n in 2..=4)")]
    BadDeutschJozsaSize(usize),
    #[error("value cannot be represented exactly: {0}")]
    Inexact(String),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
