use thiserror::Error;

/// Errors surfaced by the library API.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("state is not normalized: squared norm deviates by {deviation}")]
    NotNormalized { deviation: f64 },

    #[error("distributions are defined over different label sets")]
    LabelMismatch,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("state does not have free support: {0}")]
    NotFreeSupport(String),

    #[error("protocol failed after {retries} resampling attempts")]
    RetryExhausted { retries: usize },

    #[error("memory budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("truncation outcome is degenerate: joint success probability is zero")]
    DegenerateTruncation,

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
