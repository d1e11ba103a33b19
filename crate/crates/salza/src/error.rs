use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{source_name}: line {line}, column {column}: {message}")]
    Parse { source_name: String, line: usize, column: usize, message: String },
    #[error("{0}")]
    Core(#[from] salza_core::Error),
    #[error("{0}")]
    Usage(String),
}

impl Error {
    pub fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        Error::Io { path: path.display().to_string(), source }
    }

    pub(crate) fn parse(source_name: &str, line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse { source_name: source_name.to_string(), line, column, message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
