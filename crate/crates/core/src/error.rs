use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("linear map is singular")]
    Singular,

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("power exponent must be at least 1 (no unit is assumed)")]
    ZeroExponent,

    #[error("algebra is not an admissible Poisson algebra: {0}")]
    NotAdmissible(String),

    #[error("invalid Poisson pair: {0}")]
    InvalidPair(String),

    #[error("bracket is not a Lie algebra: {0}")]
    NotLie(String),

    #[error("element is not a nonzero idempotent")]
    NotIdempotent,

    #[error("idempotents {0} and {1} are not orthogonal")]
    NotOrthogonal(usize, usize),

    #[error("multiplication by the idempotent has an eigenvalue outside {{0, 1}} or is not diagonalizable")]
    UnexpectedEigenvalue,

    #[error("cochain is not a skew-symmetric biderivation: {0}")]
    NotBiderivation(String),

    #[error("group algebra vector is zero")]
    ZeroGroupAlgebraVector,

    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),

    #[error("fixture {fixture:?} requires parameter {param:?}")]
    MissingParameter { fixture: String, param: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid input data: {0}")]
    InvalidData(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
