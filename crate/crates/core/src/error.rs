use thiserror::Error;

/// Errors raised anywhere in the counting pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on vertex `{vertex}`")]
    SelfLoop { line: usize, vertex: String },

    #[error("arithmetic overflow in {context}")]
    Overflow { context: String },

    #[error("non-exact division by {divisor} in {context}")]
    InexactDivision { context: String, divisor: i64 },

    #[error("dimension mismatch in {op}: {left} vs {right}")]
    DimensionMismatch {
        op: &'static str,
        left: String,
        right: String,
    },

    #[error("size guard exceeded: {0}")]
    Guard(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("formula `{formula}`: {message}")]
    Formula { formula: String, message: String },

    #[error("oracle mismatch for `{formula}`: {detail}")]
    OracleMismatch { formula: String, detail: String },
}

impl Error {
    /// Attaches the id of the formula being evaluated to arithmetic errors.
    pub(crate) fn in_formula(self, id: &str) -> Error {
        match self {
            Error::Overflow { context } => Error::Overflow {
                context: format!("{id}: {context}"),
            },
            Error::InexactDivision { context, divisor } => Error::InexactDivision {
                context: format!("{id}: {context}"),
                divisor,
            },
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
