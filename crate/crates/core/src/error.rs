use thiserror::Error;

/// Errors raised by network construction, flow validation, the solvers and
/// the file formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("network must have at least two vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {vertex} out of range for a network of {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("source and sink are the same vertex {0}")]
    SameTerminals(usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("source has an incoming edge or sink has an outgoing edge; normalize the network first")]
    NotTerminal,
    #[error("capacity sum overflows the capacity type")]
    CapacityOverflow,
    #[error("cut is over {found} vertices but the network has {expected}")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("terminal vertex {0} cannot be placed in a cut's source side")]
    TerminalInCut(usize),
    #[error("flow has {found} edge values but the network has {expected} edges")]
    FlowShapeMismatch { expected: usize, found: usize },
    #[error("edge {edge} carries flow above its capacity")]
    CapacityViolated { edge: usize },
    #[error("flow conservation violated at vertex {0}")]
    ConservationViolated(usize),
    #[error("flow is not a maximum flow (an augmenting path exists)")]
    NotMaximumFlow,
    #[error("predicate reported terminal vertex {0} as forbidden")]
    TerminalForbidden(usize),
    #[error("invalid predicate: {0}")]
    InvalidPredicate(String),
    #[error("exhaustive oracle refused: size {found} exceeds the limit of {limit}")]
    OracleBudget { found: usize, limit: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
