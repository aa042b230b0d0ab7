use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("object set must be nonempty")]
    EmptyObjectSet,

    #[error("groupoids have different bases: {0}")]
    BaseMismatch(String),

    #[error("arrow set is not closed: {0}")]
    NotClosed(String),

    #[error("not a group bundle: arrow {0} has distinct source and end")]
    NotGroupBundle(String),

    #[error("factorization is not exact: arrow {arrow} has {count} decompositions")]
    NotExact { arrow: String, count: usize },

    #[error("action is not by group bundle automorphisms: witness {0}")]
    NotAutomorphismAction(String),

    #[error("morphism is not over the base: {0}")]
    NotOverBase(String),

    #[error("hypothesis violated at {witness}: {condition}")]
    HypothesisViolation { condition: String, witness: String },

    #[error("size guard exceeded: {what} = {size} > {guard}")]
    SizeGuard {
        what: String,
        size: usize,
        guard: usize,
    },

    #[error("invalid document: {0}")]
    InvalidDocument(String),

    #[error("structure failed validation:\n{0}")]
    FailedValidation(crate::report::ValidationReport),

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
