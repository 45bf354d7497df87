use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("actions do not commute: [X{0}, X{1}] != 0")]
    NotCommuting(usize, usize),

    #[error("framing is not stable: it generates a subspace of dimension {generated} < {dim}")]
    NotStable { generated: usize, dim: usize },

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("support is not rational: a characteristic polynomial does not split over Q")]
    IrrationalSupport,

    #[error("point {0} is not in the support of the module")]
    NotInSupport(String),

    #[error("module is not supported at the origin")]
    NotLocal,

    #[error("truncation order {got} is too small, need at least {required}")]
    TruncationTooSmall { required: usize, got: usize },

    #[error("resource bound exceeded: {what} would be {requested}, limit is {limit}")]
    ResourceBound {
        what: String,
        limit: usize,
        requested: usize,
    },

    #[error("supports of the summands overlap")]
    OverlappingSupports,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("the case is smooth; there is no singular witness to construct")]
    NotSingular,

    #[error("invalid tuple: {0}")]
    InvalidTuple(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
