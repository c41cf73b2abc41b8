use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("grade mismatch: {0} vs {1}")]
    GradeMismatch(usize, usize),

    #[error("interior product needs a form of positive grade")]
    ZeroGrade,

    #[error("metric is not symmetric at ({0}, {1})")]
    MetricNotSymmetric(usize, usize),

    #[error("metric is not positive definite (leading minor {0} is not positive)")]
    MetricNotPositive(usize),

    #[error(
        "metric volume factor sqrt(det g) = sqrt({0}) is not representable in this arithmetic"
    )]
    IrrationalVolume(String),

    #[error("no rational orthonormal frame for this metric: {0}")]
    IrrationalFrame(String),

    #[error("orientation check failed: {0}")]
    Orientation(String),

    #[error("structure constants are not antisymmetric at [e{0}, e{1}]")]
    NotAntisymmetric(usize, usize),

    #[error("Jacobi identity fails for (e{0}, e{1}, e{2})")]
    Jacobi(usize, usize, usize),

    #[error("not in the expected subspace: {0}")]
    Subspace(String),

    #[error("SU(3)-structure is inconsistent: {0}")]
    Structure(String),

    #[error("almost Hermitian structure is not of class G1: Nijenhuis tensor has non-skew part of size {0}")]
    NotG1(String),

    #[error("the torsion expressions disagree: {0}")]
    TorsionMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    ParseAt {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("engine invariant violated: {0}")]
    EngineBug(String),
}
