use thiserror::Error;

use crate::reconstruction::CoverViolation;
use crate::recognition::Verdict;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification of an [`Error`], used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The caller supplied something malformed or out of contract.
    Input,
    /// A well-formed question whose mathematical answer is "no".
    Negative,
    /// A size bound, search budget or integer-width guard was hit.
    Resource,
    /// An internal consistency check failed. Always a bug.
    Internal,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("hyperedge {index} is empty")]
    EmptyEdge { index: usize },
    #[error("hyperedge {index} repeats vertex {vertex}")]
    RepeatedVertex { index: usize, vertex: usize },
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("graph has no edges")]
    Edgeless,
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("cover entry {index} is not a clique of the graph")]
    NotAClique { index: usize },
    #[error("cover is not valid: {0}")]
    InvalidCover(CoverViolation),
    #[error("graph is not a member: {0}")]
    NotMember(Box<Verdict>),
    #[error("k does not divide d*N (k={k}, d={d}, N={n})")]
    NotDivisible { n: usize, k: usize, d: usize },
    #[error("degree {d} needs {needed} classes but only {available} exist; a simple hypergraph is impossible")]
    NotSimple { d: usize, needed: usize, available: usize },
    #[error("integer overflow guard tripped: {0}")]
    Overflow(String),
    #[error("graph has {n} vertices, above the bound of {max}")]
    SizeBound { n: usize, max: usize },
    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::NotMember(_) | Error::NotDivisible { .. } | Error::NotSimple { .. } => {
                ErrorKind::Negative
            }
            Error::Overflow(_) | Error::SizeBound { .. } | Error::BudgetExhausted(_) => {
                ErrorKind::Resource
            }
            Error::Internal(_) => ErrorKind::Internal,
            _ => ErrorKind::Input,
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
