use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("operation requires a graph with at least one vertex")]
    EmptyGraph,

    #[error("graph is not strongly connected")]
    NotStronglyConnected,

    #[error("graph is not semistable")]
    NotSemistable,

    #[error("graph is not stable (pass --semistable to accept semistable graphs)")]
    NotStable,

    #[error("weight {0} is slow; pass --allow-slow")]
    SlowWeight(usize),

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("parse error at row {row}, column {col}: {msg}")]
    Parse { row: usize, col: usize, msg: String },

    #[error("invalid rational `{0}`")]
    ParseRational(String),

    #[error("invalid parameters for family {family}: {msg}")]
    FamilyParams { family: String, msg: String },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("graph has {edges} edges; brute force is limited to {limit}")]
    GuardrailExceeded { edges: usize, limit: usize },

    #[error("weight {weight} is outside the supported range {min}..={max}")]
    WeightOutOfRange {
        weight: usize,
        min: usize,
        max: usize,
    },

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("catalog line {line}: {msg}")]
    CatalogFormat { line: usize, msg: String },

    #[error("catalog line {line}: field `{field}` does not match the adjacency matrix ({msg})")]
    CatalogValidation {
        line: usize,
        field: &'static str,
        msg: String,
    },

    #[error("golden fixture line {line}: {msg}")]
    Fixture { line: usize, msg: String },

    #[error("{0} does not fit in a 64-bit integer")]
    Overflow(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
