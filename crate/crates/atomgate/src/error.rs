//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degenerate state: {0}")]
    DegenerateState(String),

    #[error("incompatible grids: {0}")]
    GridMismatch(String),

    #[error("singular kernel: {0}")]
    SingularKernel(String),

    #[error("time {t} outside schedule range [0, {t_max}]")]
    ScheduleRange { t: f64, t_max: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("propagation instability: norm drift {drift:.3e} exceeds {limit:.3e}; try a smaller dt")]
    Instability { drift: f64, limit: f64 },

    #[error("no convergence after {iters} iterations (residual {residual:.3e})")]
    Convergence { iters: usize, residual: f64 },

    #[error("target fidelity {target} not reached in bracket; best observed {best:.6}")]
    TargetNotReached { target: f64, best: f64 },

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 2 for configuration problems, 3 for
    /// numerical-convergence failures, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::InvalidParameter(_) => 2,
            Error::Convergence { .. } | Error::Instability { .. } => 3,
            _ => 1,
        }
    }
}
