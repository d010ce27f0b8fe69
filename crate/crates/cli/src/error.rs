use avgbi_core::CheckReport;

/// Every axiom passed.
pub const EXIT_PASS: i32 = 0;
/// Some axiom failed; the report was still rendered.
pub const EXIT_FAIL: i32 = 1;
/// The input could not be used.
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] avgbi_core::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    /// Rejections by a construction's input gate count as failed checks, all
    /// other errors as unusable input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(avgbi_core::Error::Rejected(_)) => EXIT_FAIL,
            _ => EXIT_INPUT,
        }
    }

    /// The failing report behind a gate rejection.
    pub fn report(&self) -> Option<&CheckReport> {
        match self {
            CliError::Core(e) => e.report(),
            _ => None,
        }
    }
}
