use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A graph6 byte outside the printable range `63..=126`.
    #[error("graph6: byte {byte:#04x} at offset {offset} is outside 63..=126")]
    Format { offset: usize, byte: u8 },

    /// A graph6 stream whose length does not match its declared vertex count.
    #[error("graph6: expected {expected} bytes, found {found}")]
    Length { expected: usize, found: usize },

    /// Malformed edge-list or expression input.
    #[error("line {line}: {message}")]
    Input { line: usize, message: String },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    Range { vertex: usize, n: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    /// An operation was called on an input that violates its contract.
    #[error("precondition violated: {0}")]
    Precondition(Precondition),

    #[error("capacity exceeded: n = {n} but at most {max} vertices are supported")]
    Capacity { n: usize, max: usize },
}

/// The specific contract an input failed to meet.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Precondition {
    #[error("graph is complete, no non-adjacent pair exists")]
    Complete,
    #[error("vertices {0} and {1} are adjacent")]
    Adjacent(usize, usize),
    #[error("v and w must be distinct (both are {0})")]
    SameVertex(usize),
    #[error("graph contains an induced 3K1 on {0:?}")]
    Contains3K1(Vec<usize>),
    #[error("graph contains an induced C5 on {0:?}")]
    ContainsC5(Vec<usize>),
    /// The prior cover handed to incremental extension is not a valid cover of G - u.
    #[error("prior cover invalid: {0}")]
    InvalidPrior(String),
}
