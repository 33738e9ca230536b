use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] incmin::Error),

    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error("config error at {location}: {message}")]
    Config { location: String, message: String },
}

impl CliError {
    /// 1 when the input was understood but fails the check, 2 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(incmin::Error::InfeasibleChain(_) | incmin::Error::NotInvariant(_)) => 1,
            CliError::Lib(incmin::Error::FixpointCap { .. }) => 1,
            _ => 2,
        }
    }
}
