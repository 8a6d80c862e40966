use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("q^({num}/{den}) is not an integral power of qhat at rank {n}")]
    NonIntegralExponent { num: i64, den: i64, n: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("coefficient rings differ: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("polynomial is not symmetric: swapping x{0} and x{1} changes it")]
    NotSymmetric(usize, usize),
    #[error("matrix is not antisymmetric at ({0}, {1})")]
    NotAntisymmetric(usize, usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("K Q' K^T differs from Q at ({row}, {col}): expected {expected}, got {got}")]
    MonomialCondition {
        row: usize,
        col: usize,
        expected: i64,
        got: i64,
    },
    #[error("matrix is singular")]
    Singular,
    #[error("entry ({0}, {1}) is not an integer")]
    NonIntegral(usize, usize),
    #[error("malformed surface: {0}")]
    Surface(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
