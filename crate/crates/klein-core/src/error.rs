//! Shared error type for the whole crate.

/// Errors raised by the numerical kernels, the group catalog and the
/// decision procedures.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An operation was called with inputs outside its contract
    /// (non-square matrix where a square one is required, asymmetric
    /// input to the symmetric eigensolver, empty radius schedule, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// A matrix that must be invertible is singular within tolerance.
    #[error("singular input: {0}")]
    SingularInput(String),

    /// An iterative kernel failed to converge.
    #[error("numeric failure: {0}")]
    NumericFailure(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),

    #[error("unknown embedding: {0}")]
    UnknownEmbedding(String),

    /// A matrix claimed to lie in a catalog group fails its defining
    /// equations.  Carries the residual so callers can report it.
    #[error("not a member of {group}: defining-equation residual {residual:.3e} exceeds {tol:.1e}")]
    Membership {
        group: String,
        residual: f64,
        tol: f64,
    },

    /// An exact decision procedure was handed an empirical cone.
    #[error("empirical cone rejected: {0}; use subset_proper_evidence on the sampled point cloud instead")]
    EmpiricalInput(String),

    #[error("invalid catalog: {0}")]
    InvalidCatalog(String),

    /// Both an existence and a nonexistence criterion verified for the
    /// same pair; the catalog data must be corrupted.
    #[error("catalog inconsistency: {0}")]
    CatalogInconsistency(String),

    /// A cone piece exceeds the generator budget of the projection code.
    #[error("generator count exceeded: piece has {got} generators, limit {limit}")]
    GeneratorCount { got: usize, limit: usize },

    /// Separation test was asked about two points of one orbit.
    #[error("same orbit: {0}")]
    SameOrbit(String),

    #[error("retraction failure: {0}")]
    RetractionFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
