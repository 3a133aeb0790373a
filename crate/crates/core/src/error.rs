use thiserror::Error;

use crate::units::Dimension;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("degenerate geometry: d = {d}, dx = {dx} (need d > dx >= 0)")]
    DegenerateGeometry { d: f64, dx: f64 },

    #[error("dimension mismatch: {lhs:?} vs {rhs:?}")]
    DimensionMismatch { lhs: Dimension, rhs: Dimension },

    #[error("unsupported dimension `{0}`")]
    UnsupportedDimension(String),

    #[error("Lorentz index {0} out of range (expected 0..=3)")]
    IndexOutOfRange(usize),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("invalid config: {0}")]
    Config(String),

    #[error("no crossover: {0}")]
    NoCrossover(String),

    #[error("{0}")]
    EmptyInput(String),

    #[error("sign calibration failed: {0}")]
    Calibration(String),

    #[error("malformed matrix block: {0}")]
    Parse(String),
}
