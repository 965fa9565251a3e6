use thiserror::Error;

/// Errors raised by graph construction, checkers and builders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order {0} is outside the supported range 1..=64")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0} rejected")]
    Loop(usize),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("malformed graph6: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parameter(msg.into()))
}
