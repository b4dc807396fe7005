use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("pole at evaluation point")]
    Pole,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("torus links unsupported: gcd({n}, {m}) != 1")]
    NotAKnot { n: i64, m: i64 },
    #[error("singular linear system: {0}")]
    Singular(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("data error: {0}")]
    Data(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
