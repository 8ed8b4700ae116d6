use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate edge id `{0}`")]
    DuplicateEdge(String),

    #[error("unknown edge id `{0}`")]
    UnknownEdge(String),

    #[error("edge index {0} is out of range")]
    EdgeOutOfRange(usize),

    #[error("cannot contract loop `{0}`")]
    ContractLoop(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An exhaustive search would exceed a configured limit.
    #[error("{what}: size {size} exceeds cap {cap}")]
    Capacity {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("chain has {got} coefficients but the graph has {expected} edges")]
    ChainLength { expected: usize, got: usize },

    #[error("chain is not a cycle")]
    NotACycle,

    #[error("orientation is not defined on every edge of its domain")]
    PartialOrientation,

    #[error("orientation is not totally cyclic")]
    NotTotallyCyclic,

    #[error("oriented circuits {0} and {1} are discordant")]
    Discordant(usize, usize),

    #[error("semigroup generators do not span a full-rank lattice")]
    Degenerate,

    #[error("degree bound must be at least 1")]
    ZeroDegree,
}

pub type Result<T> = std::result::Result<T, Error>;
