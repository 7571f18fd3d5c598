use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// Malformed or inconsistent input: file contents or arguments.
    #[error("{0}")]
    Input(String),

    #[error(transparent)]
    Core(#[from] switchlogic::Error),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    /// 2 for input problems, 3 when a search or size limit was hit.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(
                switchlogic::Error::BudgetExceeded { .. }
                | switchlogic::Error::Sizing { .. }
                | switchlogic::Error::Overflow(_),
            ) => 3,
            _ => 2,
        }
    }
}
