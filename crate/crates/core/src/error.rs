use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("{what} index {index} out of range for rank {rank}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        rank: usize,
    },

    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("variable {name} exceeds rank {rank}")]
    VariableOutOfRange { name: String, rank: usize },

    #[error("image monomial {monomial} lies outside the codomain sector")]
    ImageOutsideCodomain { monomial: String },

    #[error("sector mismatch: {0}")]
    SectorMismatch(String),

    #[error("subspaces live in different ambient bases")]
    AmbientMismatch,

    #[error("operator is not graded: {0}")]
    Ungraded(String),

    #[error("vector length {got} does not match ambient dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid subspace document: {0}")]
    Document(String),
}
