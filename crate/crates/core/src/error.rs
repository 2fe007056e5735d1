use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid sphere radius: t = {t} exceeds word length {len}")]
    RadiusTooLarge { t: usize, len: usize },

    #[error("insdel ball radius must be even, got {d}")]
    OddBallRadius { d: usize },

    #[error("the empty word has no run profile")]
    EmptyWord,

    #[error("invalid bit character {0:?}, expected '0' or '1'")]
    InvalidBit(char),

    #[error("size cap exceeded for {what}: requested {requested}, limit {limit}")]
    SizeCap {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("length mismatch: {context} (left {left}, right {right})")]
    LengthMismatch {
        context: &'static str,
        left: usize,
        right: usize,
    },

    #[error("duplicate word {word} in input set")]
    DuplicateWord { word: String },

    #[error("word {word} has length {actual}, expected {expected}")]
    WrongWordLength {
        word: String,
        expected: usize,
        actual: usize,
    },

    #[error("codeword count {words} does not match matrix order {order}")]
    OrderMismatch { words: usize, order: usize },

    #[error("estimate table invalid: {reason}")]
    BadEstimates { reason: String },

    #[error("image value {label} is not in the function's image")]
    UnknownImageValue { label: i64 },

    #[error("smod arguments must be positive: a = {a}, b = {b}")]
    SmodDomain { a: i64, b: i64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("supersequence premise violated: {word} is not a subsequence of the given word")]
    NotASupersequence { word: String },

    #[error("channel event invalid: {reason}")]
    BadChannelEvent { reason: String },

    #[error("received length {len} outside decodable range [{min}, {max}]")]
    ReceivedLengthOutOfRange { len: usize, min: usize, max: usize },

    #[error("function table invalid: {reason}")]
    BadFunctionTable { reason: String },

    #[error("no coloring with at most {lambda} colors was found by exhaustive backtracking")]
    ColoringInfeasible { lambda: usize },

    #[error("construction verification failed: {0}")]
    VerificationDefect(String),

    #[error("io error: {0}")]
    Io(String),

    #[error("json error: {0}")]
    Json(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
