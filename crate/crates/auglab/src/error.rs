//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {context}: {details}")]
    ShapeMismatch { context: String, details: String },

    #[error("tensor contains a non-finite value ({context})")]
    NonFinite { context: String },

    #[error("loss node must be a scalar, got shape {shape:?}")]
    NonScalarLoss { shape: Vec<usize> },

    #[error("non-finite gradient for parameter '{name}'")]
    NonFiniteGradient { name: String },

    #[error("duplicate parameter name '{name}'")]
    DuplicateParam { name: String },

    #[error("unknown parameter '{name}'")]
    UnknownParam { name: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("gradient check found no clean probe point after {attempts} attempts")]
    ProbeExhausted { attempts: usize },

    #[error("training diverged: non-finite loss at epoch {epoch}, batch {batch}")]
    Diverged { epoch: usize, batch: usize },

    #[error("unknown transform family '{0}'")]
    UnknownFamily(String),

    #[error("invalid transform family: {0}")]
    InvalidFamily(String),

    #[error("class {class} has {available} samples, invariance test needs {needed}")]
    NotEnoughClassSamples {
        class: usize,
        available: usize,
        needed: usize,
    },

    #[error("exact Wasserstein-1 requested for n={n} samples, brute-force limit is {limit}")]
    ExactW1TooLarge { n: usize, limit: usize },

    #[error("wrong IDX magic in {path}: expected {expected:#010x}, found {found:#010x}")]
    IdxMagic {
        path: String,
        expected: u32,
        found: u32,
    },

    #[error("truncated IDX file {path}: expected {expected} payload bytes, found {found}")]
    IdxTruncated {
        path: String,
        expected: usize,
        found: usize,
    },

    #[error("IDX count mismatch: {images} images vs {labels} labels")]
    IdxCountMismatch { images: usize, labels: usize },

    #[error("config error in {path}: {message}")]
    Config { path: String, message: String },

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn shape(context: impl Into<String>, details: impl Into<String>) -> Self {
        Error::ShapeMismatch {
            context: context.into(),
            details: details.into(),
        }
    }
}
