use crate::report::CheckReport;
use crate::MAX_DIM;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("dimension {0} exceeds the cap of {MAX_DIM}")]
    Capacity(usize),
    #[error("unknown kind `{0}`")]
    UnknownKind(String),
    #[error("input rejected: {} failed", .0.failed_ids().join(", "))]
    Rejected(Box<CheckReport>),
    #[error("bilinear form is degenerate")]
    DegenerateForm,
    #[error("weight must be nonzero")]
    ZeroWeight,
    #[error("r is not factorizable")]
    NotFactorizable,
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn dim(what: impl Into<String>) -> Self {
        Error::Dimension(what.into())
    }

    /// The failing report behind a rejection, if any.
    pub fn report(&self) -> Option<&CheckReport> {
        match self {
            Error::Rejected(r) => Some(r),
            _ => None,
        }
    }
}

/// Turns a failing report into a rejection, passes otherwise.
pub(crate) fn require(report: CheckReport) -> Result<CheckReport> {
    if report.passed() {
        Ok(report)
    } else {
        Err(Error::Rejected(Box::new(report)))
    }
}
