use std::path::PathBuf;

/// Everything that ends a run with exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("malformed JSON: {0}")]
    Json(serde_json::Error),
    #[error("{path}: {message}")]
    Document { path: String, message: String },
    #[error("{context}: {source}")]
    Precondition { context: String, source: hopfkit_core::Error },
    #[error("{0}")]
    Usage(String),
    #[error("cannot read or write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn precondition(context: impl Into<String>, source: hopfkit_core::Error) -> CliError {
        CliError::Precondition { context: context.into(), source }
    }
}
