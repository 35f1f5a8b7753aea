use thiserror::Error;

/// Errors raised by the library. Mathematical "negative answers" (Jacobi
/// violations, homomorphism residuals, nonzero kernels) are returned as data
/// and never appear here.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by the zero function")]
    DivisionByZero,

    #[error("operands belong to different Lie algebras")]
    AlgebraMismatch,

    #[error("variable lists do not match: {0}")]
    VariableMismatch(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),

    #[error("structure constants violate the Jacobi identity ({0} violating triples)")]
    JacobiViolation(usize),

    #[error("subspace is not closed under the bracket: [{0}, {1}] leaves the span")]
    NotASubalgebra(usize, usize),

    #[error("L1 and the complement do not span the algebra: {0}")]
    NotComplement(String),

    #[error("ad w is not nilpotent on this element: term {steps} of the exponential series is still nonzero")]
    NotNilpotent { steps: usize },

    #[error("jet mode requires every coefficient of w to vanish at the origin (coefficient {0} does not)")]
    WNotInJ(usize),

    #[error("coefficient has a pole at the origin and has no jet expansion")]
    JetPole,

    #[error(
        "linear system is singular: rank {rank} < {size} (the {size}x{size} determinant vanishes)"
    )]
    SingularSystem { rank: usize, size: usize },

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
