use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed graph input (bad vertex index, self-loop, too many vertices).
    #[error("invalid input: {0}")]
    Input(String),

    /// The operation needs a bipartite graph and got one with an odd cycle.
    #[error("graph is not bipartite")]
    NotBipartite,

    /// A configured budget was exceeded.
    #[error("capacity exceeded: {what} (limit {limit}, needed {needed})")]
    Capacity {
        what: &'static str,
        limit: usize,
        needed: usize,
    },

    /// The lattice-point layers outgrew the memory budget while building
    /// the layer after `reached_degree`.
    #[error("memory budget exceeded after degree {reached_degree} (limit {limit} bytes, needed {needed})")]
    MemoryBudget {
        reached_degree: usize,
        limit: usize,
        needed: usize,
    },

    /// A precondition of the operation does not hold, or a checked
    /// post-condition failed.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Arithmetic overflow or an inconsistent Hilbert numerator.
    #[error("computation error: {0}")]
    Computation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn contract<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Contract(msg.into()))
}
