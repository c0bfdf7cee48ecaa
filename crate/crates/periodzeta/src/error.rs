use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape: {0}")]
    Shape(String),
    #[error("bad_reduction: denominator divisible by {0}")]
    BadReduction(u64),
    #[error("not_in_span")]
    NotInSpan,
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("no_characterization for {0}")]
    NoCharacterization(String),
    #[error("weight parity mismatch: {0}")]
    ParityMismatch(String),
    #[error("unknown sequence id: {0}")]
    UnknownSequence(String),
    #[error("unknown family: {0}")]
    UnknownFamily(String),
    #[error("depth_unsupported: depth {0} > 2")]
    DepthUnsupported(usize),
    #[error("divergent index: {0}")]
    Divergent(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
