use ringshaped_core::hartmann::HartmannError;
use ringshaped_core::nu_engine::NuError;
use ringshaped_core::oracle::OracleError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("{0}")]
    Unconverged(String),
    #[error(transparent)]
    Model(#[from] HartmannError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Nu(#[from] NuError),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Mismatch(_) => 1,
            Self::Invalid(_) | Self::Io { .. } => 2,
            Self::Unconverged(_) | Self::Nu(_) => 3,
            Self::Model(HartmannError::Nu(_) | HartmannError::OrthoPoly(_)) => 3,
            Self::Model(_) => 2,
            Self::Oracle(OracleError::InvalidGrid(_) | OracleError::InvalidInput(_)) => 2,
            Self::Oracle(_) => 3,
        }
    }
}
