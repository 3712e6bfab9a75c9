use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    Loop(usize),

    #[error("edge {{{0}, {1}}} is not in the graph")]
    EdgeAbsent(usize, usize),

    #[error("clique size must be at least 2, got {0}")]
    CliqueTooSmall(usize),

    #[error("{what}: n = {n} exceeds the cap of {cap}")]
    SizeCap { what: &'static str, n: usize, cap: usize },

    #[error("graph must be connected")]
    Disconnected,

    #[error("not a labeling: {0}")]
    InvalidLabeling(String),

    #[error("not a path in the graph: {0}")]
    InvalidPath(String),

    #[error("graph is not a caterpillar tree")]
    NotCaterpillar,

    #[error("graph is not a generalized caterpillar")]
    NotGeneralizedCaterpillar,

    #[error("graph contains an induced net")]
    NotNetFree,

    #[error("polynomials or ideals live in different rings")]
    RingMismatch,

    #[error("exponent must be at least 1, got {0}")]
    InvalidExponent(usize),

    #[error("ideal is not generated by squarefree monomials")]
    NotSquarefreeMonomial,

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}

impl Error {
    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::SizeCap { .. } => 3,
            Error::CrossCheck(_) => 1,
            _ => 2,
        }
    }
}
