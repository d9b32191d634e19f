use thiserror::Error;

/// Errors shared by the fuzzy-number types and the crisp linear algebra.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is singular to working precision")]
    SingularMatrix,
    #[error("expected a square matrix, got {rows}x{cols}")]
    NonSquareMatrix { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("z = {0} is outside [0, 1]")]
    ZOutOfRange(f64),
    #[error("spread must be nonnegative, got {0}")]
    NegativeSpread(f64),
    #[error("invalid z-grid: {0}")]
    InvalidGrid(String),
    #[error("fuzzy vector entries must share one endpoint representation (and grid)")]
    MixedRepresentation,
    #[error("right-hand side entry {0} is not a triangular fuzzy number")]
    NotTriangular(usize),
    #[error("non-finite entry encountered")]
    NonFinite,
}

pub type Result<T> = std::result::Result<T, Error>;
