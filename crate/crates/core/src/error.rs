use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("complex is not pure: facet {facet:?} has {found} vertices, expected {expected}")]
    NotPure {
        facet: Vec<usize>,
        expected: usize,
        found: usize,
    },
    #[error("complex is not a pseudomanifold: ridge {ridge:?} lies in {count} facets")]
    NotPseudomanifold { ridge: Vec<usize>, count: usize },
    #[error("vertex {0} does not appear in any facet")]
    UnusedVertex(usize),
    #[error("vertex {vertex} out of range 1..={m}")]
    VertexOutOfRange { vertex: usize, m: usize },
    #[error("duplicate facet {0:?}")]
    DuplicateFacet(Vec<usize>),
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<usize>),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix does not have full row rank")]
    RankDeficient,
    #[error("columns {0:?} do not extend to a basis")]
    NotUnimodular(Vec<usize>),
    #[error("column {0} is zero or not primitive")]
    ZeroColumn(usize),
    #[error("wrong ring: expected {expected}, found {found}")]
    WrongRing {
        expected: &'static str,
        found: &'static str,
    },
    #[error("no edge colored {color} between {between}")]
    NoEdge { between: String, color: usize },
    #[error("marked rows share the marking {0}")]
    SameMarking(usize),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("format error: {0}")]
    Format(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::SizeLimit(_) => 3,
            Error::InvariantViolation(_) => 4,
            _ => 2,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}
