use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph has no edges")]
    Edgeless,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("malformed graph6: {0}")]
    Graph6(String),
    /// A search was asked to run above its configured order limit.
    ///
    /// `overridable` is false for hard limits such as the 64-vertex word size
    /// of the search kernels.
    #[error("{what} is limited to order {limit}, got {order}{}", if *overridable { " (pass an explicit override to raise the limit)" } else { "" })]
    CapExceeded {
        what: &'static str,
        limit: usize,
        order: usize,
        overridable: bool,
    },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("invalid LCF code: {0}")]
    Lcf(String),
    #[error("unknown named graph {0:?}")]
    UnknownGraph(String),
    #[error("catalog entry {name:?}: {detail}")]
    Catalog { name: String, detail: String },
    #[error("invalid colour partition: {0}")]
    InvalidPartition(String),
    #[error("invalid vertex subsets: {0}")]
    InvalidSubsets(String),
    #[error("unknown claim {0:?}")]
    UnknownClaim(String),
    #[error("claim {claim} needs parameter {param}")]
    MissingParameter { claim: String, param: &'static str },
    #[error("no closed form covers {0}")]
    NoFormula(String),
    #[error("cannot read input: {0}")]
    Io(String),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("{0} overflows 128-bit arithmetic")]
    Overflow(&'static str),
}

impl Error {
    pub fn is_cap_violation(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
