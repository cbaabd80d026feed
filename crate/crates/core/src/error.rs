use thiserror::Error;

/// Errors produced by the model, solvers and oracles.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{name} = {value} is outside [0, 1]")]
    Domain { name: &'static str, value: f64 },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("band validation failed: {0}")]
    Validation(String),

    #[error("operation requires a normalized band (identity center)")]
    NotNormalized,

    #[error("second band does not strictly enclose the first: {0}")]
    Enclosure(String),

    #[error("root finding failed: {0}")]
    Convergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn unit(name: &'static str, value: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(Error::Domain { name, value })
    }
}
