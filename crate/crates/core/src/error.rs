use thiserror::Error;

use crate::datum::{Coweight, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SatakeError {
    #[error("invalid Cartan type {family}{rank}")]
    InvalidCartanType { family: String, rank: usize },

    #[error("invalid root datum: {0}")]
    InvalidDatum(ValidationReport),

    #[error("vector of length {found} does not match lattice rank {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("simple reflection index {index} out of range for semisimple rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("coweight {0} is not dominant")]
    NotDominant(Coweight),

    #[error("Weyl group has more than {cap} elements")]
    WeylGroupTooLarge { cap: usize },

    #[error("negative multiplicity {multiplicity} at {weight} in decomposition")]
    NegativeMultiplicity { weight: Coweight, multiplicity: i64 },

    #[error("character is not Weyl-invariant at {0}")]
    NonWInvariantInput(Coweight),

    #[error("operands belong to different root data")]
    DatumMismatch,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = SatakeError> = std::result::Result<T, E>;
