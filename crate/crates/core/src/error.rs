use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Caller supplied arguments that violate an operation's preconditions.
    #[error("input error: {0}")]
    Input(String),

    /// Malformed input document or scalar literal.
    #[error("parse error: {0}")]
    Parse(String),

    /// The algebra or representation fails an axiom required by the operation.
    #[error("invalid structure: {0}")]
    Invalid(String),

    /// An internal invariant that must hold by construction was violated.
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
