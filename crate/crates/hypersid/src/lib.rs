//! File formats, JSON reports, threaded evaluation and the command-line
//! front end for `hypersid-core`.

pub mod cli;
pub mod config;
pub mod format;
pub mod json;
pub mod parallel;

use format::ParseError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] hypersid_core::Error),
    #[error("{path}:{source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Input(String),
}
