//! Error type shared across the library.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown name '{name}'; available: {available}")]
    UnknownName { name: String, available: String },

    #[error("quadrature did not converge: estimated error {estimated:.3e} exceeds tolerance {tolerance:.3e}")]
    QuadratureNonConvergence { estimated: f64, tolerance: f64 },

    #[error("energy fraction must lie strictly inside (0, 1), got {0}")]
    InvalidFraction(f64),

    #[error("effective support search did not reach fraction {fraction} within window halfwidth {window:.3e}")]
    SupportSearchFailed { fraction: f64, window: f64 },

    #[error("invalid filter: {0}")]
    InvalidFilter(String),

    #[error("signal length {len} is not divisible by 2^{levels}")]
    NotDivisible { len: usize, levels: u32 },

    #[error("levels must be at least 1")]
    ZeroLevels,

    #[error("pyramid shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("signal has zero energy")]
    ZeroEnergy,

    #[error("signal too short: need at least {need} samples, got {got}")]
    SignalTooShort { need: usize, got: usize },

    #[error("scale/translation grid is empty")]
    EmptyGrid,

    #[error("scales must be positive and strictly increasing")]
    BadScales,

    #[error("spectrum does not vanish at zero (|Psi(0)| = {magnitude:.3e}); admissibility integral diverges")]
    NotAdmissible { magnitude: f64 },

    #[error("joint density coverage {coverage:.4} is below the minimum {minimum}; widen the scale/translation grid")]
    CoverageTooLow { coverage: f64, minimum: f64 },

    #[error("empty coefficient set")]
    EmptyCoefficients,

    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("{0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
