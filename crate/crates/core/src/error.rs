use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("total dimension {dim} exceeds the cap of {cap} (set QECENT_MAX_DIM to override)")]
    DimensionOverflow { dim: usize, cap: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid layout: {0}")]
    InvalidLayout(String),

    #[error("unknown subsystem label `{0}`")]
    UnknownLabel(String),

    #[error("subsystem label `{0}` appears in more than one set")]
    OverlappingLabels(String),

    #[error("empty subsystem selection")]
    EmptySelection,

    #[error("partition does not cover the layout (missing `{0}`)")]
    IncompletePartition(String),

    #[error("state is not normalised (norm {norm})")]
    NotNormalized { norm: f64 },

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not unitary (max deviation {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("eigenvalue {value:e} is negative beyond roundoff")]
    NegativeEigenvalue { value: f64 },

    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),

    #[error("erasure position {index} out of range for n = {n}")]
    PatternOutOfRange { index: usize, n: usize },

    #[error("codewords {i} and {j} are not orthogonal (|overlap| = {overlap:e})")]
    NonOrthogonal { i: usize, j: usize, overlap: f64 },

    #[error("codeword {index} has norm {norm}, expected 1")]
    BadNorm { index: usize, norm: f64 },

    #[error("codewords {i} and {j} are identical")]
    DuplicateCodeword { i: usize, j: usize },

    #[error("invalid code: {0}")]
    InvalidCode(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown built-in code `{0}`")]
    UnknownCode(String),

    #[error("Singleton bound violated: {0}")]
    SingletonViolation(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
