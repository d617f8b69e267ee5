use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("associativity fails at triple ({i},{j},{k}): ({i}*{j})*{k} != {i}*({j}*{k})")]
    Associativity { i: usize, j: usize, k: usize },

    #[error("table entry {value} at ({row},{col}) out of range for order {order}")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("H-class is not a group (no idempotent or not closed)")]
    NotGroupHClass,

    #[error("subset is not a normal subgroup")]
    NotNormal,

    #[error("subset is not a subgroup")]
    NotSubgroup,

    #[error("factor is null, not coordinatizable")]
    NotSimpleFactor,

    #[error("sandwich matrix is not regular: {0}")]
    Regularity(String),

    #[error("Rees structure is not CS-diagonal")]
    NotDiagonal,

    #[error("principal factor is null")]
    NullFactor,

    #[error("semigroup is not semisimple")]
    NotSemisimple,

    #[error("semigroup is not completely regular")]
    NotCompletelyRegular,

    #[error("well-definedness check failed: {0}")]
    WellDefinedness(String),

    #[error("theorem audit violated: {0}")]
    TheoremViolation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
