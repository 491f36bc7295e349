use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("even characteristic unsupported: p = {0}")]
    EvenCharacteristic(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus must have degree {expected}, got {got}")]
    BadModulusDegree { expected: u32, got: usize },
    #[error("modulus must be monic")]
    NonMonicModulus,
    #[error("modulus is reducible over F_{p}")]
    ReducibleModulus { p: u64 },
    #[error("modulus given for prime field (k = 1)")]
    ModulusForPrimeField,
    #[error("element index {index} out of range for field of {q} elements")]
    ElementOutOfRange { index: u64, q: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("bilinear form requires a nonsingular Gram matrix")]
    SingularForm,
    #[error("wedge takes exactly {expected} vectors, got {got}")]
    WrongVectorCount { expected: usize, got: usize },
    #[error("zero vector has no orthogonal hyperplane")]
    ZeroVector,
    #[error("subspace dimension {k} out of range for ambient dimension {d}")]
    SubspaceDimOutOfRange { k: usize, d: usize },
    #[error("point lies outside the subspace")]
    PointOutsideSubspace,
    #[error("basis rows are linearly dependent")]
    DependentBasis,
    #[error("point set is empty")]
    EmptySet,
    #[error("operation requires ambient dimension {expected}, got {got}")]
    WrongAmbientDim { expected: usize, got: usize },
    #[error("budget exceeded: cap of {cap} tuple evaluations")]
    BudgetExceeded { cap: u64 },
    #[error("requested size {size} exceeds the {total} points of the space")]
    SizeExceedsSpace { size: u64, total: u64 },
    #[error("witness for t = {t} recomputed to {got} under the determinant check")]
    WitnessMismatch { t: u64, got: u64 },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
