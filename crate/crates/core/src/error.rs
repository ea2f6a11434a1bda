use thiserror::Error;

/// Errors raised by constructors and operations in this crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("axis is not a unit vector (norm {norm})")]
    AxisNotUnit { norm: f64 },
    #[error("vector is not a unit vector (norm {norm})")]
    NotUnit { norm: f64 },
    #[error("non-finite value in input")]
    NonFinite,
    #[error("matrix is not unitary (max deviation from identity {deviation:e})")]
    NotUnitary { deviation: f64 },
    #[error("matrix is not a pure single-qubit state: {reason}")]
    NotAState { reason: &'static str },
    #[error("number of shots must be at least 1")]
    ZeroShots,
    #[error("time range must satisfy t_start < t_end (got {start} .. {end})")]
    BadRange { start: f64, end: f64 },
    #[error("trajectory needs at least 2 steps (got {0})")]
    TooFewSteps(usize),
    #[error("time grid is empty")]
    EmptyGrid,
    #[error("the halting machine is only defined in the Schrodinger and Heisenberg pictures")]
    UnsupportedPicture,
}

pub type Result<T> = std::result::Result<T, Error>;
