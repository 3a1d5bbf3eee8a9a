use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid character at position {position}")]
    InvalidCharacter { position: usize },
    #[error("operation needs a non-empty sequence")]
    EmptySequence,
    #[error("expected {expected} segment lengths, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("segment {index} has non-positive length")]
    NonPositiveLength { index: usize },
    #[error("degenerate bend at point {index}")]
    DegenerateBend { index: usize },
    #[error("invalid cut: {0}")]
    InvalidCut(&'static str),
    #[error("endpoint incompatible with the requested cut target")]
    IncompatibleTarget,
    #[error("split index {split} outside 1..{n}")]
    InvalidSplit { split: usize, n: usize },
    #[error("no {0} hook")]
    NoSuchHook(&'static str),
    #[error("axis {0} is unreachable")]
    Unreachable(&'static str),
    #[error("excess {0} not supported here")]
    UnsupportedExcess(i64),
    #[error("polygon has a whisker at vertex {0}")]
    WhiskerDetected(usize),
    #[error("polygon is not ordinary")]
    NotOrdinary,
    #[error("chain ends at the origin")]
    DegenerateClosure,
    #[error("excess residue {0} (mod 4) not supported")]
    UnsupportedResidue(i64),
    #[error("closest-point axes do not match the hook directions")]
    AxisMismatch,
    #[error("time budget exhausted")]
    Timeout,
    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
