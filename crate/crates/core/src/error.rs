//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by corpus ingest, index queries, detection and statistics.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate paper id `{0}`")]
    DuplicateId(String),

    #[error("malformed header: expected `{expected}`, got `{got}`")]
    MalformedHeader { expected: String, got: String },

    #[error("unknown paper id `{0}`")]
    UnknownPaper(String),

    #[error("co-citation of paper `{0}` with itself")]
    SamePaper(String),

    #[error("unsupported index file version {found} (this build reads version {expected})")]
    VersionMismatch { expected: u8, found: u8 },

    #[error("corrupt index file: {0}")]
    CorruptFile(String),

    #[error("invalid year window: start {start} > end {end}")]
    InvalidYearWindow { start: i32, end: i32 },

    #[error("horizon year {horizon} precedes publication year {pub_year}")]
    HorizonBeforePublication { horizon: i32, pub_year: i32 },

    #[error("empty citation series")]
    EmptySeries,

    #[error("empty corpus")]
    EmptyCorpus,

    #[error("triad has no prince")]
    NoPrince,

    #[error("density estimation requires at least one sample")]
    EmptySamples,

    #[error("bandwidth must be positive and finite, got {0}")]
    NonPositiveBandwidth(f64),

    #[error("invalid density support: lo {lo} >= hi {hi}")]
    InvalidSupport { lo: f64, hi: f64 },

    #[error("no qualifying triads")]
    EmptyInput,

    #[error("infeasible generator config: {0}")]
    InfeasibleConfig(String),

    #[error("infeasible plant spec: {0}")]
    InfeasibleSpec(String),

    #[error("unknown sleeping beauty `{0}`")]
    UnknownSb(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
