use thiserror::Error;

pub type Result<T> = std::result::Result<T, DfrftError>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DfrftError {
    #[error("{op}: dimension mismatch (expected {expected}, got {actual})")]
    DimensionMismatch {
        op: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("{op}: shape mismatch ({}x{} vs {}x{})", left.0, left.1, right.0, right.1)]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("singular to working precision at column {column} (|pivot| = {pivot:e}, threshold {threshold:e})")]
    Singular {
        column: usize,
        pivot: f64,
        threshold: f64,
    },

    #[error("transform size must be at least 1")]
    InvalidSize,

    #[error("fractional power of zero is undefined")]
    ZeroBase,

    #[error("base {modulus} is not on the unit circle")]
    OffUnitCircle { modulus: f64 },

    #[error("spectrum multiplicities sum to {sum}, expected {size}")]
    InconsistentSpectrum { size: usize, sum: usize },

    #[error("eigenvalue index {index} out of range (spectrum has {len} entries)")]
    EigenvalueIndex { index: usize, len: usize },

    #[error("invalid order {0:?}")]
    InvalidOrder(String),
}
