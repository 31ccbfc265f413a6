//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid input or usage: bad parameters, missing series, malformed shares.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// A numerical procedure failed (fixed point diverged, degenerate system).
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// Migration dynamics aborted because a short-run solve did not converge.
    #[error("simulation aborted at step {step}: short-run solve stopped at residual {residual:.3e} for lambda {lambda:?}")]
    SimulationAborted {
        step: usize,
        residual: f64,
        lambda: Vec<f64>,
    },

    /// A data file could not be parsed.
    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}
