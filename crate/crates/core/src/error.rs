use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {left:?} against {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("generators are linearly dependent over the rationals")]
    DependentGenerators,
    #[error("{0} is not a prime")]
    NotPrime(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema violation at `{path}`: {message}")]
    Schema { path: String, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("geometric assembly is unsupported: {0}; supply raw matrices instead")]
    UnsupportedGrade(String),
    #[error("component `{0}` has no intersection pairing at the working grade")]
    MissingPairing(String),
    #[error("class tuple has {found} coordinates, the complex expects {expected}")]
    TupleDimension { expected: usize, found: usize },
    #[error("class tuple does not satisfy the prelog condition")]
    NotPrelog,
    #[error("divisor must be positive")]
    ZeroDivisor,
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("operation needs component block data, unavailable for raw matrices")]
    NoBlockData,
}
