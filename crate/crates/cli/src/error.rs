use satake_core::SatakeError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Engine(#[from] SatakeError),
    #[error("invariant check failed: {0}")]
    Invariant(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 0 ok, 2 bad input, 3 resource limit, 4 invariant failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::Invariant(_) => 4,
            CliError::Engine(e) => match e {
                SatakeError::WeylGroupTooLarge { .. } | SatakeError::ResourceCap(_) => 3,
                SatakeError::NegativeMultiplicity { .. }
                | SatakeError::NonWInvariantInput(_)
                | SatakeError::DatumMismatch
                | SatakeError::Internal(_) => 4,
                _ => 2,
            },
        }
    }
}
