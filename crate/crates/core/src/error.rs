use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocoError {
    #[error("alphabet size {0} is not supported (need 2..=255)")]
    InvalidAlphabet(u32),

    #[error("level {level} is outside the alphabet of size {q}")]
    LevelOutOfRange { level: u32, q: u8 },

    #[error("words have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("words are over different alphabets (q={left} vs q={right})")]
    AlphabetMismatch { left: u8, right: u8 },

    #[error("invalid forbidden pattern: {0}")]
    InvalidPattern(String),

    #[error("pattern {0:?} is listed more than once")]
    DuplicatePattern(Vec<u8>),

    #[error("constraint violation at position {position}")]
    ConstraintViolation { position: usize },

    #[error("index overflow: codeword index lies outside the message space")]
    IndexOverflow,

    #[error("index {index} is not below the code size {size}")]
    IndexOutOfRange { index: String, size: String },

    #[error("enumeration of {candidates} candidates exceeds the cap of {cap}")]
    EnumerationCapExceeded { candidates: String, cap: u64 },

    #[error("the constraint admits no infinite sequence")]
    DegenerateConstraint,

    #[error("power iteration did not converge within {0} iterations")]
    NotConverged(usize),

    #[error("{family} is not defined for length {m}")]
    LengthOutOfRange { family: String, m: i64 },

    #[error("code is too small to carry a message (m = {m})")]
    EmptyMessageSpace { m: usize },

    #[error("expected {expected} message bits, got {got}")]
    MessageLength { expected: usize, got: usize },

    #[error("contribution at position {position} is not an integer")]
    NonIntegral { position: usize },

    #[error("invalid family parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed stream: {0}")]
    MalformedStream(String),

    #[error("bad constraint config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, LocoError>;
