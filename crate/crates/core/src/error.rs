use crate::graph::NodeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("self-loop on node {0}")]
    SelfLoop(NodeId),
    #[error("unknown node {0}")]
    UnknownNode(NodeId),
    #[error("graph has no nodes")]
    EmptyGraph,
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph is disconnected ({0} components)")]
    Disconnected(usize),
    #[error("assignment covers {got} nodes, graph has {expected}")]
    IncompleteAssignment { expected: usize, got: usize },
    #[error("dendrogram has no snapshots")]
    EmptyDendrogram,
    #[error("k = {k} outside 1..={n}")]
    BadK { k: usize, n: usize },
    #[error("fraction {fraction} of {n} nodes selects no node")]
    FractionTooSmall { fraction: f64, n: usize },
    #[error("fraction must lie strictly between 0 and 1, got {0}")]
    BadFraction(f64),
    #[error("scenarios use different fractions ({0} vs {1})")]
    MismatchedFraction(f64, f64),
    #[error("scenario kind mismatch: {0}")]
    WrongScenario(&'static str),
    #[error("invalid generator parameters: {0}")]
    BadParams(String),
    #[error("line {0}: expected two node labels")]
    MalformedLine(usize),
    #[error("self-loop on label {0:?}")]
    SelfLoopLabel(String),
}
