use thiserror::Error;

/// Errors produced by the free braid library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("generator index {index} out of range for {strands} strands (valid: 1..={max})", max = .strands.saturating_sub(1))]
    IndexOutOfRange { index: usize, strands: usize },

    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid strand partition: {0}")]
    InvalidPartition(String),

    #[error("invalid parity scheme designation: {0}")]
    InvalidScheme(String),

    /// The requested parity is not defined for this word.
    #[error("{0}")]
    ParityUndefined(String),

    #[error("crossing {0} is not a chord of the diagram")]
    UnknownChord(usize),

    #[error("move {0} is not applicable")]
    MoveNotApplicable(String),

    #[error("stale bigon at positions ({0}, {1})")]
    StaleBigon(usize, usize),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("node cap of {cap} exceeded while exploring")]
    CapExceeded { cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
