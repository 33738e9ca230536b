use thiserror::Error;

use crate::dset::DSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid set {elements:?}: {reason}")]
    InvalidSet { elements: Vec<u32>, reason: &'static str },

    #[error("incomparable grades: {left} vs {right}")]
    GradeMismatch { left: usize, right: usize },

    #[error("operation `{op}` needs sets of size at least {min}, got {d}")]
    GradeTooSmall { op: &'static str, d: usize, min: usize },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("member {member} has an element <= {k}")]
    NotAbove { member: DSet, k: u32 },

    #[error("partial compressions did not stabilize within {cap} steps")]
    FixpointCap { cap: usize },

    #[error("not a simplicial complex: face {missing} is missing (subset of {face})")]
    MissingFace { missing: DSet, face: DSet },

    #[error("face {face} lies outside [{n}]")]
    OutsideGround { face: DSet, n: u32 },

    #[error("infeasible f-vector chain: {0}")]
    InfeasibleChain(String),

    #[error("chain is not Inc-invariant: {0}")]
    NotInvariant(String),

    #[error("universe too large: {0}")]
    UniverseTooLarge(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
