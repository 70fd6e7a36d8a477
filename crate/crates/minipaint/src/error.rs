use crate::paint::VerificationFailure;

/// Coarse classification used by the CLI to map errors onto exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or out-of-contract input.
    Input,
    /// A configured budget was exceeded; the computation was aborted rather
    /// than finished wrong.
    Capacity,
    /// An invariant the algorithms guarantee was violated.
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("vertex set has capacity {found}, graph has {expected} vertices")]
    CapacityMismatch { expected: usize, found: usize },

    #[error("painting covers {found} vertices, graph has {expected}")]
    PaintingSizeMismatch { expected: usize, found: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("stroke area is empty")]
    EmptyArea,

    #[error("stroke area is not connected")]
    DisconnectedArea,

    #[error("stroke {index}: {source}")]
    Stroke {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("graph is not connected")]
    DisconnectedGraph,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("plan does not paint the template: {0}")]
    InvalidPlan(VerificationFailure),

    #[error("plan never paints vertex {vertex}")]
    UncoveredVertex { vertex: usize },

    #[error("flood sequence does not make the painting monochromatic")]
    NotFlooding,

    #[error("vertices {0:?} do not induce a P4")]
    NotInducedP4([usize; 4]),

    #[error("hub {0:?} is not a dominating induced P4")]
    InvalidHub(Vec<usize>),

    #[error("plan is not canonical for the given parameters: {0}")]
    NotCanonical(VerificationFailure),

    #[error("graph is not a cograph (induced P4: {0:?})")]
    NotCograph([usize; 4]),

    #[error("graph is not co-gem-free (induced co-gem: {0:?})")]
    NotCogemFree([usize; 5]),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{0}")]
    Parse(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Capacity(_) => ErrorKind::Capacity,
            Error::Internal(_) => ErrorKind::Internal,
            Error::Stroke { source, .. } => source.kind(),
            _ => ErrorKind::Input,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
