use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FloodError {
    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph on {n} vertices exceeds the limit of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("the zero polynomial has no finite (x+1)-multiplicity")]
    ZeroPolynomial,
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("no vertex satisfies the leaf-reduction precondition")]
    NotApplicable,
    #[error("not a flood polynomial: {0}")]
    MalformedPolynomial(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for FloodError {
    fn from(e: std::io::Error) -> Self {
        FloodError::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, FloodError>;
