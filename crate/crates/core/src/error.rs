use thiserror::Error;

/// Errors produced while building inputs or running a solver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("permutation is empty")]
    Empty,
    #[error("value {0} appears more than once")]
    Duplicate(u32),
    #[error("value {value} is outside 1..={n}")]
    OutOfRange { value: u32, n: usize },
    #[error("cannot parse {token:?} as a positive integer")]
    BadToken { token: String },
    #[error("length must be at least 1")]
    ZeroLength,
    #[error("{what} does not avoid 213 and 231")]
    InvalidClass { what: &'static str },
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("bottom row {0} does not avoid 213 and 231")]
    ClassViolation(String),
    #[error("structure violation: {0}")]
    StructureViolation(String),
    #[error("input too large for brute force: {what} = {got} exceeds {limit}")]
    SizeGuard {
        what: &'static str,
        got: usize,
        limit: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
