use thiserror::Error;

/// Errors shared by every module of the laboratory.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("point is not on the manifold: {0}")]
    OffManifold(String),

    #[error("submanifold incompatible with manifold: {0}")]
    IncompatibleSubmanifold(String),

    /// A grid (or a λ-grid) too coarse for the requested object. Under-resolution
    /// is always an error, never a silent bias.
    #[error("under-resolved: {0}")]
    UnderResolved(String),

    #[error("spectral window [{lo}, {hi}) exceeds basis truncation (max frequency {max_frequency})")]
    WindowExceedsTruncation { lo: f64, hi: f64, max_frequency: f64 },

    #[error("degenerate fit input: {0}")]
    DegenerateFit(String),

    #[error("hypothesis violated: {0}")]
    HypothesisFailed(String),

    #[error("numerical instability detected: {0}")]
    Unstable(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("linear algebra backend: {0}")]
    Backend(String),
}

impl From<ndarray_linalg::error::LinalgError> for Error {
    fn from(e: ndarray_linalg::error::LinalgError) -> Self {
        Error::Backend(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
