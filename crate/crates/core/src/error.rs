use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the numerical kernel.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input violated a parameter or domain constraint. The message names it.
    #[error("domain error: {0}")]
    Domain(String),

    /// `z0 = 0`, where the region collapses to the single value 0.
    #[error("degenerate point: z0 = 0 gives the singleton region {{0}}")]
    DegeneratePoint,

    #[error("size error: {0}")]
    Size(String),

    /// Adaptive quadrature hit its panel budget before reaching tolerance.
    #[error("quadrature did not converge: estimate {estimate}, achieved error {achieved:e} > {requested:e}")]
    Convergence {
        estimate: Complex64,
        achieved: f64,
        requested: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
