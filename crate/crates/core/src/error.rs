use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table has no nonzero entries")]
    EmptyTable,
    #[error("entry ({i},{j}) is not positive")]
    NonpositiveEntry { i: usize, j: i64 },
    #[error("support violation at ({i},{j}): column {prev} has no entry in degree < {j}", prev = i - 1)]
    SupportViolation { i: usize, j: i64 },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("total row does not match the column sum in column {column}")]
    TotalMismatch { column: usize },
    #[error("invalid degree sequence: {0}")]
    InvalidDegreeSequence(String),
    #[error("N = {n} is smaller than d_0 + d_s = {min}")]
    InvalidN { n: i64, min: i64 },
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
    #[error("table has an entry in negative degree {0}; the Hilbert numerator needs j >= 0")]
    NegativeDegree(i64),
    #[error("power sum of exponent {power} is nonzero; table is not Cohen-Macaulay of the stated codimension")]
    PsViolation { power: usize },
    #[error("table is not decomposable: {0}")]
    NotDecomposable(String),
    #[error("table is not self-dual")]
    NotSelfDual,
    #[error("top minimal and maximal shifts differ (t_s = {t}, T_s = {big_t})")]
    TopNotSymmetric { t: i64, big_t: i64 },
    #[error("sequence {0:?} is not dominated by its dual (d_i + d_(s-i) <= d_s fails)")]
    NotDominatedByDual(Vec<i64>),
    #[error("generators are not concentrated in degree 0")]
    NotGeneratedInDegreeZero,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("identity check failed: {0}")]
    IdentityMismatch(String),
    #[error("guardrail: {0}")]
    Guardrail(String),
    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
