use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point ({0}, {1}) lies outside the closed unit square")]
    OutOfDomain(f64, f64),
    #[error("source and evaluation points coincide (|x - v| < 1e-6)")]
    CoincidentPoints,
    #[error("degenerate cell: w = {w}, h = {h}")]
    DegenerateCell { w: f64, h: f64 },
    #[error("point ({0}, {1}) lies outside the cell")]
    OutOfCell(f64, f64),
    #[error("norm index p must satisfy p >= 1, got {0}")]
    InvalidP(f64),
    #[error("delta must lie in (0, 1], got {0}")]
    InvalidDelta(f64),
    #[error("unknown field `{0}`")]
    UnknownField(String),
    #[error("cell budget N = {n} is smaller than the number of blocks ({blocks})")]
    Budget { n: usize, blocks: usize },
    #[error("N = {0} is not a perfect square")]
    NotPerfectSquare(usize),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("invalid truncation: {0}")]
    InvalidTruncation(String),
    #[error("invalid quadrature: {0}")]
    InvalidQuadrature(String),
    #[error("boundary trace corners disagree by {0:e}")]
    CornerMismatch(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
