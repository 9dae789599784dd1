use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("uniformity must be at least 1")]
    ZeroUniformity,
    #[error("edge {index} has {found} vertices, expected {expected}")]
    EdgeSize { index: usize, found: usize, expected: usize },
    #[error("edge {index} repeats vertex {vertex}")]
    DegenerateEdge { index: usize, vertex: u32 },
    #[error("vertex {vertex} out of range (vertex count {count})")]
    UnknownVertex { vertex: u32, count: usize },
    #[error("duplicate edge {0}")]
    DuplicateEdge(String),
    #[error("uniformity mismatch: expected {expected}, found {found}")]
    UniformityMismatch { expected: usize, found: usize },
    #[error("links are undefined for uniformity 1")]
    NoLinks,
    #[error("invalid partition: {0}")]
    Partition(String),
    #[error("not partite: {0}")]
    NotPartite(String),
    #[error("invalid injection: {0}")]
    Injection(String),
    #[error("sub-hypergraph is not a union of components: {0}")]
    NotComponentClosed(String),
    #[error("host has no vertices")]
    EmptyHost,
    #[error("pattern has no edges")]
    EdgelessPattern,
    #[error("work budget of {0} exceeded")]
    BudgetExceeded(u64),
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("hypothesis failed: {0}")]
    Hypothesis(String),
    #[error("zero density: {0}")]
    ZeroDensity(String),
    #[error("kernel mismatch: {0}")]
    KernelMismatch(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownFamily(String),
    #[error("no embedding: {0}")]
    NoEmbedding(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
