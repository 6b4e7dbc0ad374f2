//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("lookup error: {0}")]
    Lookup(String),
    #[error("state error: {0}")]
    State(String),
    #[error("pairing error: {0}")]
    Pairing(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("registry error: {0}")]
    Registry(String),
    #[error("reference point error: {0}")]
    Reference(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
