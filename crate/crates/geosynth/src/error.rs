use std::path::PathBuf;
use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A column named by the schema is missing or the schema itself is malformed.
    #[error("schema error: {0}")]
    Schema(String),

    /// A cell could not be parsed as a number.
    #[error("parse error at row {row}, column `{column}`: {message}")]
    Parse {
        row: usize,
        column: String,
        message: String,
    },

    /// Fewer than two records remain after filtering/suppression.
    #[error("insufficient data: {n} record(s) remain, need at least 2")]
    InsufficientData { n: usize },

    /// A record id was not found in the dataset.
    #[error("unknown record id `{0}`")]
    UnknownRecord(String),

    /// An argument violates its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Inputs have inconsistent dimensions.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// Dense linear algebra failed (non-positive-definite matrix, etc.).
    #[error("numerical error: {0}")]
    Numerical(String),

    /// A chain, collection, or report was empty where content is required.
    #[error("empty input: {0}")]
    Empty(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code class for the CLI: 2 = i/o, 3 = validation, 4 = numerical.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io { .. } | Error::Csv(_) | Error::Json(_) => 2,
            Error::Schema(_)
            | Error::Parse { .. }
            | Error::InsufficientData { .. }
            | Error::UnknownRecord(_)
            | Error::Domain(_)
            | Error::Dimension(_)
            | Error::Empty(_)
            | Error::Config(_) => 3,
            Error::Numerical(_) => 4,
        }
    }

    /// Short machine-readable kind tag used in JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Schema(_) => "schema",
            Error::Parse { .. } => "parse",
            Error::InsufficientData { .. } => "insufficient_data",
            Error::UnknownRecord(_) => "unknown_record",
            Error::Domain(_) => "domain",
            Error::Dimension(_) => "dimension",
            Error::Numerical(_) => "numerical",
            Error::Empty(_) => "empty",
            Error::Config(_) => "config",
            Error::Io { .. } => "io",
            Error::Csv(_) => "csv",
            Error::Json(_) => "json",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
