use alloc::string::String;

/// Errors produced by the constructions, verifiers and bound evaluators.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported field: quadratic character needs odd characteristic, got p = {p}")]
    UnsupportedField { p: u64 },
    #[error("wrong residue: q = {q} must be {expected} mod 4")]
    WrongResidue { q: u64, expected: u64 },
    #[error("deletion too large: cannot remove {requested} rows from order {order}")]
    DeletionTooLarge { requested: usize, order: usize },
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("matrix is not symmetric")]
    AsymmetricMatrix,
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("hypothesis failed ({clause}): {detail}")]
    HypothesisFailed { clause: &'static str, detail: String },
    #[error("internal assertion failed: {0}")]
    InternalAssertion(String),
}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! invalid {
    ($($arg:tt)*) => {
        $crate::error::Error::InvalidInput(alloc::format!($($arg)*))
    };
}
pub(crate) use invalid;
