//! Error types shared across the crate.

use std::fmt;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors emitted by tensor math, model code, data handling, and persistence.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Two tensors had incompatible shapes for the requested operation.
    ShapeMismatch {
        context: &'static str,
        left: Vec<usize>,
        right: Vec<usize>,
    },
    /// A constructor or operation received an invalid argument.
    InvalidArgument {
        context: &'static str,
        message: String,
    },
    /// An index (token id, joint index, ...) fell outside its valid range.
    IndexOutOfRange {
        context: &'static str,
        index: usize,
        bound: usize,
    },
    /// `backward` was called on a tensor that is not a scalar.
    NonScalarLoss { shape: Vec<usize> },
    /// A motion sequence was too short for the requested operation.
    InsufficientFrames { got: usize, need: usize },
    /// Text input was empty where a caption is required.
    EmptyText,
    /// A generation task was invoked without a required modality.
    TaskInput {
        task: &'static str,
        message: String,
    },
    /// A run configuration failed to parse or validate.
    Config { message: String },
    /// The corpus is too small for the requested procedure.
    CorpusTooSmall { got: usize, need: usize },
    /// Checkpoint magic or format version is not supported.
    CheckpointVersion { message: String },
    /// Checkpoint file ended before the declared payload was read.
    CheckpointTruncated { offset: usize },
    /// Checkpoint contains a section this build does not understand.
    CheckpointUnknownSection { name: String },
    /// A section required for the requested use of the checkpoint is missing.
    CheckpointMissingSection { name: String },
    /// File-system failure, with the offending path.
    Io { path: String, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ShapeMismatch { context, left, right } => {
                write!(f, "{context}: shape mismatch between {left:?} and {right:?}")
            }
            Error::InvalidArgument { context, message } => {
                write!(f, "{context}: {message}")
            }
            Error::IndexOutOfRange { context, index, bound } => {
                write!(f, "{context}: index {index} out of range (bound {bound})")
            }
            Error::NonScalarLoss { shape } => {
                write!(f, "backward requires a scalar loss, got shape {shape:?}")
            }
            Error::InsufficientFrames { got, need } => {
                write!(f, "motion too short: {got} frames, need at least {need}")
            }
            Error::EmptyText => write!(f, "text input is empty"),
            Error::TaskInput { task, message } => {
                write!(f, "task {task}: {message}")
            }
            Error::Config { message } => write!(f, "config error: {message}"),
            Error::CorpusTooSmall { got, need } => {
                write!(f, "corpus too small: {got} samples, need at least {need}")
            }
            Error::CheckpointVersion { message } => {
                write!(f, "checkpoint version error: {message}")
            }
            Error::CheckpointTruncated { offset } => {
                write!(f, "checkpoint truncated at byte {offset}")
            }
            Error::CheckpointUnknownSection { name } => {
                write!(f, "checkpoint has unknown section {name:?}")
            }
            Error::CheckpointMissingSection { name } => {
                write!(f, "checkpoint is missing section {name:?}")
            }
            Error::Io { path, message } => write!(f, "io error on {path}: {message}"),
        }
    }
}

impl std::error::Error for Error {}

impl Error {
    pub fn io(path: &std::path::Path, err: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            message: err.to_string(),
        }
    }

    /// True for errors a CLI should treat as bad user configuration (exit 1)
    /// rather than data / IO trouble (exit 2).
    pub fn is_config_class(&self) -> bool {
        matches!(
            self,
            Error::Config { .. }
                | Error::InvalidArgument { .. }
                | Error::EmptyText
                | Error::TaskInput { .. }
        )
    }
}
