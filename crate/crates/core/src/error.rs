use thiserror::Error;

/// Errors produced by graph construction, parsing, enumeration and the harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graphs with {0} vertices are unsupported (limit {1})")]
    UnsupportedSize(usize, usize),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("enumeration of {what} exceeded the cap of {cap} sets")]
    EnumerationCap { what: &'static str, cap: usize },

    #[error("edge count {edges} exceeds the brute-force cap of {cap}")]
    BruteForceCap { edges: usize, cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency violation: {0}")]
    Internal(String),

    #[error("invalid graph spec: {0}")]
    InvalidSpec(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
