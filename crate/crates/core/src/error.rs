use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("vertex {vertex} has {degree} outgoing edges; at most one is allowed")]
    OutDegree { vertex: String, degree: usize },

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),

    #[error("vertex {vertex} out of range for a forest with {size} vertices")]
    VertexOutOfRange { vertex: usize, size: usize },

    #[error("vertex {0} is a root and has no outgoing edge")]
    NotAnEdgeSource(usize),

    #[error("forest size {size} exceeds the brute-force bound {bound}")]
    SizeBound { size: usize, bound: usize },

    #[error("requested order {requested} exceeds the truncation order {available}")]
    Truncation { requested: usize, available: usize },

    #[error("series is not invertible: {0}")]
    NotInvertible(String),

    #[error("domain mismatch: {0}")]
    Domain(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("fixed-point iteration did not converge in {iterations} iterations (last update {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("degenerate fit: error {error:e} at h = {h:e} is below the noise floor {floor:e}")]
    DegenerateFit { h: f64, error: f64, floor: f64 },
}
