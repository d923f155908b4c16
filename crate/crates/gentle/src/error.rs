use thiserror::Error;

use crate::algebra::Violation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("presentation is not gentle: {}", format_violations(.0))]
    NotGentle(Vec<Violation>),
    #[error("quiver is not connected")]
    Disconnected,
    #[error("degenerate algebra: {0}")]
    Degenerate(String),
    #[error("algebra is infinite-dimensional: {0}")]
    InfiniteDimensional(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("cannot parse object literal `{literal}`: {message}")]
    Literal { literal: String, message: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("not a chain map: {0}")]
    NotChainMap(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
