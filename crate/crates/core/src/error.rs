//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("partition parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("partition length {len} exceeds the cap K = {cap}")]
    LengthExceedsCap { len: usize, cap: usize },

    #[error("box ({row},{col}) lies outside the Young diagram")]
    BoxOutsideDiagram { row: usize, col: usize },

    #[error("gamma pole at z = {0}")]
    GammaPole(String),

    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),

    #[error("series did not converge within {terms} terms (last term ratio {last_ratio:.3})")]
    NonConvergence { terms: usize, last_ratio: f64 },

    #[error("invalid series control: {0}")]
    InvalidControl(String),

    #[error("missing parameter {name} for {equation}")]
    MissingTheta {
        equation: &'static str,
        name: &'static str,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
