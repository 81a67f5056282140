use thiserror::Error;

/// Errors raised by constructors and operations whose preconditions fail.
///
/// Violations that are the *answer* to a question (a Jacobi residue, a failed
/// witness condition, a non-existent contraction limit) are returned as
/// report values instead.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("linear map is singular")]
    Singular,

    #[error("the given vectors do not form a basis ({rank} independent out of {dim})")]
    NotABasis { rank: usize, dim: usize },

    #[error("span is not a subalgebra: [{0}, {1}] leaves it")]
    NotSubalgebra(usize, usize),

    #[error("matrix is not an involution")]
    NotInvolutive,

    #[error("map is not a Lie algebra automorphism: fails on basis pair ({0}, {1})")]
    NotAutomorphism(usize, usize),

    #[error("eigenspace grading violated for basis pair ({0}, {1})")]
    GradingViolated(usize, usize),

    #[error("operation requires a real Lie algebra")]
    RequiresReal,

    #[error("real algebra has a non-real structure constant at ({0}, {1}, {2})")]
    NonRealConstant(usize, usize, usize),

    #[error("invalid structure constant table: {0}")]
    InvalidTable(String),

    #[error("involution does not define a real structure: {0}")]
    NotRealStructure(String),

    #[error("unknown catalog name `{0}`")]
    UnknownCatalog(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("parse error: {0}")]
    Parse(String),
}
