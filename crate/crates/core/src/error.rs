use thiserror::Error;

/// Errors raised while validating polygons or running the numerical analyses.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("side {index} is negative ({value})")]
    NonPositiveSide { index: usize, value: f64 },

    #[error("side {index} is not a finite number ({value})")]
    NonFiniteSide { index: usize, value: f64 },

    #[error("a polygon needs at least 3 nonzero sides, got {count}")]
    TooFewSides { count: usize },

    #[error(
        "polygon inequality violated: side {index} ({value}) is not shorter than the sum of the others ({rest})"
    )]
    PolygonInequalityViolated { index: usize, value: f64, rest: f64 },

    #[error("invalid central angles: {0}")]
    InvalidAngles(String),

    #[error("radius must be a positive finite number, got {0}")]
    InvalidRadius(f64),

    #[error("circumradius solver did not converge after {iterations} iterations")]
    ConvergenceFailure { iterations: usize },

    #[error("radius {radius} is smaller than half of side {index} ({side})")]
    InconsistentConfig {
        index: usize,
        side: f64,
        radius: f64,
    },

    #[error("polygon area collapsed to {area}")]
    DegenerateArea { area: f64 },

    #[error("curve is only defined for x > 2, got {x}")]
    DomainError { x: f64 },

    #[error("invalid range: {min} > {max}")]
    RangeError { min: f64, max: f64 },

    #[error("rejection sampling gave up after {attempts} attempts")]
    RejectionOverflow { attempts: usize },

    #[error("optimizer did not reach tolerance {tol} in any of {restarts} restarts")]
    NonConvergence { restarts: usize, tol: f64 },

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
