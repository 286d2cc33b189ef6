use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A prime factor could not be found within the configured work budget.
    #[error("factorization incomplete: cofactor {cofactor} could not be split within budget")]
    FactorizationIncomplete { cofactor: String },

    #[error("singular curve (discriminant is zero)")]
    Singular,

    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("model is not minimal: {0}")]
    NonMinimal(String),

    /// Two rows of the local Tamagawa table matched the same input.
    #[error("internal consistency error: {0}")]
    Inconsistent(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
