use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field element {0}")]
    InvalidTrit(i64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("generator rows are not a basis: rank {rank} < {rows} rows")]
    NotABasis { rank: usize, rows: usize },

    #[error("empty generator matrix")]
    EmptyGenerator,

    #[error("dual of a [{n},{n}] code is the zero code")]
    ZeroDual { n: usize },

    #[error("enumeration of 3^{k} codewords exceeds the budget of 3^{max_k}")]
    TooLarge { k: usize, max_k: usize },

    #[error("invalid coordinate set: {0}")]
    InvalidCoords(String),

    #[error("puncture collapses dimension from {k} to {rank}")]
    PunctureCollapse { k: usize, rank: usize },

    #[error("shortening yields dimension {achieved}, expected {expected}")]
    ShortenDimension { expected: usize, achieved: usize },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("unknown identifier {0:?}")]
    UnknownId(String),

    #[error("{id}: expected [{}] lcd={}, computed [{}] lcd={}", fmt_params(.expected), .expected.3, fmt_params(.computed), .computed.3)]
    VerificationMismatch {
        id: String,
        expected: (usize, usize, usize, bool),
        computed: (usize, usize, usize, bool),
    },

    #[error("exhaustive search over 3^{exponent} candidates exceeds the budget of 3^{max}")]
    SearchBudget { exponent: usize, max: usize },

    #[error("hash mismatch for {id}: expected {expected}, found {found}")]
    HashMismatch {
        id: String,
        expected: String,
        found: String,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn fmt_params(p: &(usize, usize, usize, bool)) -> String {
    format!("{},{},{}", p.0, p.1, p.2)
}
