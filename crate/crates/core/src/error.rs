use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("alist line {line}: {msg}")]
    Alist { line: usize, msg: String },

    #[error("invalid parity-check matrix: {0}")]
    InvalidMatrix(String),

    #[error("degenerate code: rank(H) = {rank} equals the codeword length")]
    DegenerateCode { rank: usize },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("infeasible degree request: {0}")]
    InfeasibleDegrees(String),

    #[error("invalid spreading rule: {0}")]
    InvalidSpreadingRule(String),

    #[error("degenerate sequence, choose different columns or not-column mode")]
    DegenerateSequence,

    #[error("chip count {chips} is not a multiple of the processing gain {gain}")]
    ChipCount { chips: usize, gain: usize },

    #[error("noise spectral density must be positive, got {0}")]
    NonPositiveNoise(f64),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
