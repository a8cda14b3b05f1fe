use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed textual or JSON input; `field` names the offending entry.
    #[error("cannot parse {field}: {message}")]
    Parse { field: String, message: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("field too small: {0}")]
    FieldSize(String),

    /// Residual multiplicities survive after the last line of a reduction.
    #[error("lines do not exhaust the scheme; residual multiplicity remains at points {0:?}")]
    IncompleteCover(Vec<usize>),

    #[error("sequence rejected: {0}")]
    Classification(String),

    #[error("the curves share a common factor vanishing at the point")]
    CommonFactor,

    #[error("multiplicity of the zero form is undefined")]
    ZeroForm,

    #[error("out of scope: {0}")]
    Scope(String),

    #[error("the Weyl orbit of e1 is infinite for r = {0}")]
    InfiniteOrbit(usize),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn parse(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            field: field.into(),
            message: message.into(),
        }
    }
}
