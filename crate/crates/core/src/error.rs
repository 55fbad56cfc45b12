use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("element {id} out of range for a table of size {size}")]
    ElementOutOfRange { id: usize, size: usize },

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("rank chain violated: {0}")]
    ChainViolated(String),

    #[error("certificate failed replay: {0}")]
    Certificate(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
