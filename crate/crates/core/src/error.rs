use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("center set is empty")]
    EmptyCenters,

    #[error("instance has no constraint line")]
    MissingLine,

    #[error("line direction has zero length")]
    DegenerateLine,

    /// A brute-force oracle was asked to run beyond its budget.
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),

    /// No candidate radius turned out feasible. Sufficiently large radii are
    /// always feasible, so this indicates a numerical breakdown.
    #[error("numeric failure: {0}")]
    NumericFailure(String),

    #[error("parse error at `{path}`: {message}")]
    Parse { path: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            message: message.into(),
        }
    }
}
