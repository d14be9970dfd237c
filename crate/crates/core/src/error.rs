//! Crate-wide error type.

/// A vertex whose in-degree and out-degree differ, as reported by a balance
/// check on an arc digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalanceOffender {
    /// Canonical vertex key.
    pub vertex: Vec<u8>,
    pub in_degree: usize,
    pub out_degree: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// Parameters that are syntactically fine but describe a family with no
    /// universal cycle host (one-member families, window size below 3).
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("window index {index} out of range 1..={size}")]
    WindowIndexOutOfRange { index: usize, size: usize },

    /// The digraph has vertices with in-degree != out-degree, so no Eulerian
    /// circuit (and hence no universal cycle through it) exists.
    #[error("digraph is not balanced at {} vertex(es)", offenders.len())]
    NotBalanced { offenders: Vec<BalanceOffender> },

    /// The digraph splits into several nontrivial components, so no Eulerian
    /// circuit (and hence no universal cycle through it) exists.
    #[error("digraph is not weakly connected")]
    NotConnected,

    #[error("window sequence of length {length} is too short for window size {window}")]
    SequenceTooShort { length: usize, window: usize },

    /// Two windows of a sequence demand different states for the same host
    /// pair; the sequence cannot be realized by any host graph.
    #[error(
        "windows {first} and {second} disagree on host pair ({a},{b}): \
         multiplicity {first_mult} vs {second_mult}"
    )]
    ConflictingWindows {
        first: usize,
        second: usize,
        a: usize,
        b: usize,
        first_mult: usize,
        second_mult: usize,
    },

    /// A graph does not decode to any member of the requested family.
    #[error("not in family: {0}")]
    NotInFamily(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A freshly built host failed its own verification pass. This indicates
    /// a bug in a builder, never a property of the input.
    #[error("built host failed verification: {0}")]
    FailedPostVerification(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
