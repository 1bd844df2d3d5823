use thiserror::Error;

use crate::partition::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("k must be at least 1, got {0}")]
    InvalidK(i64),

    #[error("partition {partition} is not {k}-bounded")]
    NotKBounded { partition: Partition, k: usize },

    #[error("degree mismatch: |{left}| = {} but |{right}| = {}", left.degree(), right.degree())]
    DegreeMismatch { left: Partition, right: Partition },

    #[error("cell ({row},{col}) lies outside the diagram of {partition}")]
    CellOutsideDiagram {
        partition: Partition,
        row: usize,
        col: usize,
    },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,

    #[error("diagonal entry {index} of a unitriangular system is not 1")]
    NonUnitDiagonal { index: usize },

    #[error("matrix is not upper triangular (entry ({row},{col}) is nonzero)")]
    NotTriangular { row: usize, col: usize },

    #[error("matrix dimensions do not agree")]
    ShapeMismatch,

    #[error("cannot combine a {left} value with a {right} value")]
    BasisMismatch { left: String, right: String },

    #[error("vector index of length {0} exceeds the supported maximum of {max}", max = crate::vertex::MAX_VECTOR_LEN)]
    VectorTooLong(usize),

    #[error("function is not in the span of the {k}-split polynomials")]
    NotInKSpace { k: usize },

    #[error("coordinates are not polynomial in t")]
    NonPolynomialCoordinates,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("parse error: {0}")]
    Parse(String),
}
