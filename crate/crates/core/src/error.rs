use thiserror::Error;

/// Error type shared by every operation in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Dimensions are missing, zero, or incompatible for the requested operation.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// An index or index selection lies outside the valid range.
    #[error("invalid index: {0}")]
    Index(String),

    /// A combination rank lies outside `[0, C(n, m))`.
    #[error("invalid rank: {0}")]
    Rank(String),

    /// Entries do not form a permutation of `1..=k`.
    #[error("invalid permutation: {0}")]
    Permutation(String),

    /// A matrix entry was NaN or infinite at construction.
    #[error("non-finite entry: {0}")]
    NonFinite(String),

    /// The metric matrix failed validation.
    #[error("invalid metric: {0}")]
    Metric(String),

    /// A computed quantity violated a numeric sanity bound.
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// The request exceeds a hard capacity cap.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// The value has the wrong shape for this operation.
    #[error("unsupported shape: {0}")]
    Shape(String),
}

pub type Result<T> = std::result::Result<T, Error>;
