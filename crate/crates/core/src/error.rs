use thiserror::Error;

use crate::budget::Timeout;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pair {index}: endpoint of ({u}, {v}) out of range for {n} vertices")]
    EndpointOutOfRange { index: usize, u: usize, v: usize, n: usize },

    #[error("pair {index}: loop at vertex {v}")]
    Loop { index: usize, v: usize },

    #[error("edge {edge} ({u}, {v}) does not cross the bipartition")]
    InvalidBipartition { edge: usize, u: usize, v: usize },

    #[error("label count {got} does not match vertex count {n}")]
    LabelCount { got: usize, n: usize },

    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),

    #[error("edge id {edge} does not exist (graph has {m} edges)")]
    DanglingEdge { edge: usize, m: usize },

    #[error("orientation covers the wrong edge set: {0}")]
    OrientationCoverage(String),

    #[error("arc {tail}->{head} does not match the endpoints of edge {edge}")]
    ArcMismatch { edge: usize, tail: usize, head: usize },

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("invalid interval system: {0}")]
    InvalidIntervals(String),

    #[error("invalid subtree family: {0}")]
    InvalidSubtrees(String),

    #[error("partition part {part} has no orientation certificate")]
    MissingCertificate { part: usize },

    #[error("part {part} is not a comparability graph")]
    NotComparability { part: usize },

    #[error("graph is not perfect: omega = {omega}, chi = {chi}")]
    NotPerfect { omega: usize, chi: usize },

    #[error("input does not match the expected construction: {0}")]
    Mismatch(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Timeout(#[from] Timeout),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
