use thiserror::Error;

/// Errors raised while constructing or validating a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph needs at least {min} vertices, got {got}")]
    TooFewVertices { min: usize, got: usize },
    #[error("circulant offset k={k} invalid for n={n}: need 1 <= k and 2k < n")]
    InvalidCirculantOffset { n: usize, k: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("edge list parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Errors from the dense linear-algebra kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LinalgError {
    #[error("matrix is singular (pivot {pivot:e} at column {column})")]
    Singular { column: usize, pivot: f64 },
    #[error("eigensolver did not converge within {0} sweeps")]
    NoConvergence(usize),
    #[error("matrix text parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Errors raised by operator constructions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OperatorError {
    #[error("coin dimension must be positive")]
    ZeroCoinDimension,
    #[error("operation requires a regular graph")]
    RegularityRequired,
    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),
    #[error("principal block projections degenerate for kappa = 1")]
    DegenerateKappa,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Errors in an experiment configuration.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("empty size range {min}..={max}")]
    EmptyRange { min: usize, max: usize },
    #[error("theta list must be nonempty")]
    NoThetas,
    #[error("theta must be nonnegative, got {0}")]
    NegativeTheta(f64),
    #[error("step budget must be at least 1")]
    ZeroBudget,
}

/// Errors raised while running the walk dynamics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum WalkError {
    #[error("field has {got} entries, graph has {expected} arcs")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("measure has {got} entries, graph has {expected} vertices")]
    MeasureDimensionMismatch { expected: usize, got: usize },
    #[error("field entries must be finite")]
    NonFiniteEntry,
    #[error("measure entries must be nonnegative and finite")]
    InvalidMeasureEntry,
    #[error("linear system for the stationary state is singular")]
    SingularSystem,
    #[error("closed form needs kappa >= 2, got {0}")]
    KappaOutOfDomain(usize),
    #[error("subset enumeration limited to {max} vertices, got {got}")]
    TooManyVertices { max: usize, got: usize },
    #[error("distance did not drop below the threshold within {t_max} steps (last d = {last_distance:e})")]
    NotConverged { t_max: usize, last_distance: f64 },
}
