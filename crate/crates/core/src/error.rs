use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (max asymmetry {asymmetry:e} > {tolerance:e})")]
    NotHermitian { asymmetry: f64, tolerance: f64 },

    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})"
    )]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("entry count {got} does not match shape {rows}x{cols}")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        got: usize,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("state vector is zero")]
    ZeroState,

    #[error("state is not normalized (norm^2 = {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    #[error("invalid Schmidt coefficients: {0}")]
    InvalidSchmidt(String),

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("minimum subsystem dimension is 1; normalized negativity is undefined")]
    DegenerateDimension,

    #[error("operation requires Schmidt rank dimension {expected}, got {got}")]
    WrongDimension { expected: usize, got: usize },

    #[error("spectral negativity {spectral} disagrees with Schmidt negativity {schmidt}")]
    InternalInconsistency { spectral: f64, schmidt: f64 },

    #[error("amplitude file, line {line}: {message}")]
    Parse { line: usize, message: String },
}
