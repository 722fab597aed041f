use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A tensor or sequence dimension did not match what the operation requires.
    #[error("shape mismatch on {axis}: expected {expected}, got {actual}")]
    ShapeMismatch {
        axis: &'static str,
        expected: usize,
        actual: usize,
    },

    /// A class label lies outside `[0, class_count)`.
    #[error("label {label} at step {step} is out of range for {class_count} classes")]
    LabelOutOfRange {
        step: usize,
        label: u32,
        class_count: usize,
    },

    /// A sequence is shorter than the operation's minimum length.
    #[error("sequence too short: need at least {needed} samples, got {actual}")]
    SequenceTooShort { needed: usize, actual: usize },

    /// A parameter or configuration value violates a precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Model file does not start with the expected magic bytes.
    #[error("model file: bad magic bytes")]
    BadMagic,

    /// Model file was written with an unsupported format version.
    #[error("model file: unsupported format version {found} (this build reads version {expected})")]
    VersionMismatch { found: u32, expected: u32 },

    /// Model file ended before all declared fields were read.
    #[error("model file: truncated")]
    Truncated,

    /// Model file contains bytes after the last declared field.
    #[error("model file: trailing data after final parameter tensor")]
    TrailingData,

    /// A dataset CSV row failed to parse.
    #[error("csv error at line {line}: {msg}")]
    CsvData { line: u64, msg: String },

    /// No training sequence is long enough to cut subsequences from.
    #[error("no sequence is at least {subseq_len} samples long")]
    NoUsableSequence { subseq_len: usize },

    /// Training produced a non-finite loss.
    #[error("non-finite loss at iteration {iteration}")]
    NonFiniteLoss { iteration: usize },

    /// Scaler fitting requires at least one sequence.
    #[error("empty training set")]
    EmptyTrainingSet,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
