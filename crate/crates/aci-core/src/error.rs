use thiserror::Error;

/// Errors surfaced by the engine.
///
/// Contract violations that can only arise from buggy internal code (for
/// example inexact division inside a colon computation) panic instead of
/// returning a variant here.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("parse error at offset {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown variable `{name}` at offset {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("invalid ring context: {0}")]
    InvalidContext(String),

    #[error("ring context mismatch: {0}")]
    ContextMismatch(String),

    #[error("invalid ideal generators: {0}")]
    InvalidGenerators(String),

    #[error("operation requires a proper ideal, but the unit ideal was given")]
    UnitIdeal,

    #[error("operation requires an Artinian quotient, but dim R/I = {dim}")]
    NonArtinian { dim: u32 },

    #[error("not a regular sequence")]
    NotRegularSequence,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("resampling exhausted after {attempts} attempts while sampling {what} (seed {seed})")]
    ResamplingExhausted {
        what: String,
        attempts: u32,
        seed: u64,
    },

    #[error("genericity failure: {0}")]
    Genericity(String),

    #[error("truncation degree {degree} could not be certified: {message}")]
    TruncationUncertified { degree: u32, message: String },

    #[error("consistency check failed: {0}")]
    CheckFailed(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
