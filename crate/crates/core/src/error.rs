use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Edge-list input could not be parsed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// graph6 input could not be parsed.
    #[error("graph6 error at byte offset {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("vertex {vertex} is not in 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {vertex} of {which} is not free (it lies in more than one maximal clique)")]
    NotFree { vertex: usize, which: &'static str },

    #[error("edge {{{0},{1}}} is already present")]
    EdgePresent(usize, usize),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("domain error: {0}")]
    Domain(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }

    /// Process exit status the CLI uses for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Capacity(_) => 3,
            _ => 2,
        }
    }
}
