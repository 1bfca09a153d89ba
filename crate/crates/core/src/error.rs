use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("quotient source exhausted: needed index {needed}")]
    SourceExhausted { needed: usize },

    #[error("value is rational; an irrational input is required")]
    NotIrrational,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("operands live in different quadratic fields (D={0} vs D={1})")]
    FieldMismatch(u64, u64),

    #[error("word is not Sturmian of this slope: no case matches at level {k}")]
    NotSturmian { k: usize },

    #[error("{count} cases match at level {k}")]
    Ambiguous { k: usize, count: usize },

    #[error("prefix too short: need {needed} letters, have {have}")]
    PrefixTooShort { needed: usize, have: usize },

    #[error("consistency violation at level {k}: {msg}")]
    Consistency { k: usize, msg: String },

    #[error("invalid transition at level {k}: ({from}) -> ({to})")]
    InvalidTransition { k: usize, from: String, to: String },

    #[error("t = {t} at level {k} outside [1, {max}]")]
    TOutOfRange { k: usize, t: u64, max: u64 },

    #[error("chain determines only {available} letters, {requested} requested")]
    NeedsMoreLevels { requested: usize, available: usize },

    #[error("no repeat of length {n} inside a prefix of {len} letters")]
    InsufficientPrefix { n: usize, len: usize },

    #[error("prefix cap of {cap} letters reached before r({n}) resolved")]
    PrefixCap { n: usize, cap: usize },

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("chain statistics undefined: {0}")]
    StatsUndefined(String),

    #[error("chain is not eventually periodic")]
    NonPeriodic,

    #[error("verification mismatch: {0}")]
    Mismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
