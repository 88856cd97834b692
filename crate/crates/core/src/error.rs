use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A factorial argument went negative or a polynomial denominator vanished.
    #[error("domain error at (n={n}, k={k}): {reason}")]
    Domain { n: i64, k: i64, reason: String },

    #[error("incompatible terms: {0}")]
    IncompatibleTerms(String),

    #[error("parse error at offset {offset}: expected {}, found {found}", .expected.join(" or "))]
    Parse {
        offset: usize,
        expected: Vec<String>,
        found: String,
    },

    #[error("structure error at offset {offset}: {message}")]
    Structure { offset: usize, message: String },

    #[error("no zero-free evaluation grid found within the search window")]
    SingularGrid,

    #[error("index {n} is below the series start index {start}")]
    BelowStart { n: i64, start: i64 },

    #[error("series `{0}` has no hypergeometric term model")]
    NotHypergeometric(String),

    #[error("consecutive terms at n={n} and n={} share a sign", .n + 1)]
    NonAlternating { n: i64 },

    #[error("term magnitude failed to decrease at n={n}")]
    MonotonicityViolation { n: i64 },

    #[error("no tail bound certificate for `{series}` from n={n}")]
    NoTailBound { series: String, n: i64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("catalog error: {0}")]
    Catalog(String),
}

impl Error {
    pub(crate) fn domain(n: i64, k: i64, reason: impl Into<String>) -> Self {
        Error::Domain {
            n,
            k,
            reason: reason.into(),
        }
    }
}
