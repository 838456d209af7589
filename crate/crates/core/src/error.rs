use thiserror::Error;

/// Errors raised by object constructors, bijections and size guards.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid set partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid restricted growth function: {0}")]
    InvalidRgf(String),
    #[error("cannot parse {kind} from {input:?}: {reason}")]
    Parse {
        kind: &'static str,
        input: String,
        reason: String,
    },
    #[error("{what} = {value} is out of range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error("{object} is not {class}")]
    NotInClass { object: String, class: &'static str },
    #[error("n = {n} exceeds the limit {limit} for {operation}")]
    SizeLimit {
        operation: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("series bounds differ: {left:?} vs {right:?}")]
    BoundMismatch { left: [usize; 3], right: [usize; 3] },
    #[error("series exponential needs a zero constant term")]
    NonzeroConstantTerm,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
