//! Crate-wide error type with stable per-class exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("bad magic in {path}: expected {expected:?}, found {found:?}")]
    BadMagic {
        path: String,
        expected: [u8; 4],
        found: [u8; 4],
    },

    #[error("unsupported format version {found} in {path} (supported: {supported})")]
    UnsupportedVersion {
        path: String,
        found: u32,
        supported: u32,
    },

    #[error("truncated file {path}: expected {expected} bytes, found {actual}")]
    Truncated {
        path: String,
        expected: u64,
        actual: u64,
    },

    #[error("non-finite value at row {row}, column {col}")]
    NonFinite { row: usize, col: usize },

    #[error("label {label} at row {row} outside [0, {num_classes})")]
    LabelRange {
        row: usize,
        label: i64,
        num_classes: usize,
    },

    #[error("checksum mismatch in {path}: stored {stored:016x}, computed {computed:016x}")]
    ChecksumMismatch {
        path: String,
        stored: u64,
        computed: u64,
    },

    #[error("csv parse error at line {line}: {reason}")]
    CsvParse { line: usize, reason: String },

    #[error("dimension mismatch: expected {expected}, found {found} ({context})")]
    DimensionMismatch {
        expected: usize,
        found: usize,
        context: String,
    },

    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),

    #[error("numerical blowup at integration step {step}: {context}")]
    NumericalBlowup { step: usize, context: String },

    #[error("non-finite loss at epoch {epoch}, batch {batch}")]
    NonFiniteLoss { epoch: usize, batch: usize },

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("empty input: {0}")]
    EmptyInput(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable process exit code for the CLI, distinct per error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io { .. } => 10,
            Error::BadMagic { .. } => 11,
            Error::UnsupportedVersion { .. } => 12,
            Error::Truncated { .. } => 13,
            Error::NonFinite { .. } => 14,
            Error::LabelRange { .. } => 15,
            Error::ChecksumMismatch { .. } => 16,
            Error::CsvParse { .. } => 17,
            Error::DimensionMismatch { .. } | Error::SchemaMismatch(_) => 18,
            Error::NumericalBlowup { .. } | Error::NonFiniteLoss { .. } => 20,
            Error::DegenerateInput(_) => 21,
            Error::EmptyInput(_) | Error::InvalidArgument(_) => 22,
        }
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
