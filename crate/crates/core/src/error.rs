use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("operation requires a non-empty graph")]
    EmptyGraph,

    #[error("vertex {0} is isolated, so no total dominating set exists")]
    IsolatedVertex(usize),

    #[error("graph has no edges")]
    EdgelessGraph,

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("duplicate element name {0:?} in universe")]
    DuplicateElement(String),

    #[error("unknown element {0:?}")]
    UnknownElement(String),

    #[error("invalid name {0:?}: names must be non-empty and free of whitespace")]
    InvalidName(String),

    #[error("set {0} is empty; an empty set admits no hitting set")]
    EmptySet(usize),

    #[error("element {0:?} occurs in no set and cannot be covered")]
    UncoverableElement(String),

    #[error("instance has {size} ground elements, above the enumeration cap of {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("instance has {0} ground elements; the enumeration engine is limited to 64")]
    GroundTooLarge(usize),

    #[error("element {0:?} hits every set; the construction requires that no single element does")]
    UniversalElement(String),

    #[error("the construction requires a non-empty family")]
    EmptyFamily,

    #[error("k = {0} is not supported; the construction requires k >= 2")]
    InvalidK(usize),

    #[error("expected a {expected} instance, found a {found} instance")]
    KindMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
