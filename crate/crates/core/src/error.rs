use thiserror::Error;

/// Errors produced by graph construction, parsing, models and statistics.
#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at line {line}: node {label:?} connected to itself")]
    SelfLoop { line: usize, label: String },

    #[error("malformed line {line}: expected two node labels, got {content:?}")]
    MalformedLine { line: usize, content: String },

    #[error("no edges")]
    NoEdges,

    #[error("empty network")]
    EmptyNetwork,

    #[error("density undefined: subset has {size} nodes, need at least 2")]
    DensityUndefined { size: usize },

    #[error("node id {id} out of range for network of {node_count} nodes")]
    NodeOutOfRange { id: usize, node_count: usize },

    #[error("invalid Watts-Strogatz parameters (n={n}, k={k}, beta={beta}): {reason}")]
    InvalidWattsStrogatz {
        n: usize,
        k: usize,
        beta: f64,
        reason: &'static str,
    },

    #[error("graph is disconnected: no path between nodes {i} and {j}")]
    Disconnected { i: usize, j: usize },

    #[error("invalid embedding dimension {d} for {size} nodes (need 1 <= d <= size-1)")]
    InvalidDimension { d: usize, size: usize },

    #[error("skewness undefined")]
    SkewnessUndefined,

    #[error("network sizes differ: {a} vs {b} nodes")]
    SizeMismatch { a: usize, b: usize },

    #[error("correlation undefined: dyad indicator vector is constant")]
    CorrelationUndefined,

    #[error("non-binary cell at row {row}, column {col}: {value:?}")]
    NonBinaryCell {
        row: usize,
        col: usize,
        value: String,
    },

    #[error("ragged row {row}: expected {expected} cells, got {got}")]
    RaggedRow {
        row: usize,
        expected: usize,
        got: usize,
    },

    #[error("empty incidence input: missing header row")]
    EmptyIncidence,

    #[error("label {label:?} contains characters not representable in this format")]
    InvalidLabel { label: String },

    #[error("duplicate label {label:?}")]
    DuplicateLabel { label: String },

    #[error("too few replicates: got {got}, need at least {min}")]
    TooFewReplicates { got: usize, min: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
