use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("point has no boundary")]
    PointBoundary,

    #[error("invalid pasting diagram: {0}")]
    InvalidDiagram(String),

    #[error("incompatible labeling at {dim}-cell {cell}: {msg}")]
    IncompatibleLabel { dim: usize, cell: usize, msg: String },

    #[error("invalid globular set: {0}")]
    InvalidGlobularSet(String),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("dimension {dim} out of range for truncation {n}")]
    DimensionOutOfRange { dim: usize, n: usize },

    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),

    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("arity {arity} exceeds the operad's cap {cap}")]
    ArityCap { arity: usize, cap: usize },

    #[error("no {dim}-cell {cell} in arity {arity}")]
    NoSuchCell { arity: usize, dim: usize, cell: usize },

    #[error("malformed operad spec: {0}")]
    OperadSpec(String),

    #[error("operad law violated: {0}")]
    OperadLaw(String),

    #[error("invalid operad series: {0}")]
    Series(String),

    #[error("not composable: {0}")]
    NotComposable(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("invalid (V,P)-category: {0}")]
    InvalidCategory(String),

    #[error("invalid piecewise-linear map: {0}")]
    InvalidMap(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
