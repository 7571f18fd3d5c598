use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {detail}")]
    Dimension { op: &'static str, detail: String },

    #[error("{op} would produce a {rows}x{cols} matrix, above the cap of {cap} entries")]
    Sizing {
        op: &'static str,
        rows: usize,
        cols: usize,
        cap: usize,
    },

    #[error("{what} index {index} out of range [1, {max}]")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },

    #[error("invalid logical network: {0}")]
    InvalidNetwork(String),

    #[error("invalid system: {0}")]
    InvalidSystem(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("enumeration budget exceeded: {needed} candidates needed, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("integer overflow while counting {0}")]
    Overflow(&'static str),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn dim(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Dimension {
            op,
            detail: detail.into(),
        }
    }
}
