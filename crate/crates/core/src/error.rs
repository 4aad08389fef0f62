use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Where in an input text a parse error was detected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    /// Zero-based byte offset.
    Byte(usize),
    /// One-based line number.
    Line(usize),
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Position::Byte(b) => write!(f, "byte {b}"),
            Position::Line(l) => write!(f, "line {l}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph of order {order} exceeds the vertex cap of {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("invalid proportion {num}/{den}: need 0 <= num <= den and den > 0")]
    InvalidProportion { num: u64, den: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at {at}: {reason}")]
    Parse { at: Position, reason: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn parse(at: Position, reason: impl Into<String>) -> Self {
        Error::Parse {
            at,
            reason: reason.into(),
        }
    }
}
