use thiserror::Error;

use crate::reduction::MachinePair;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("assignment does not fit instance: {0}")]
    Incompatible(String),

    #[error("invalid arrival order: {0}")]
    InvalidOrder(String),

    /// A job of a reduced instance sits on a non-anchor machine, which gives it an
    /// infinite load contribution.
    #[error("job {job} is assigned to non-anchor machine {machine} (flat index {flat})")]
    NonAnchor {
        job: usize,
        machine: MachinePair,
        flat: usize,
    },

    #[error("job {job} has an infinite resulting norm on every machine")]
    NoFiniteChoice { job: usize },

    #[error("invalid norm exponent: {0}")]
    InvalidTau(String),

    #[error("machine count {0} is too small for a ratio bound (need at least 2)")]
    TooFewMachines(usize),

    #[error("load norm overflowed f64 while scheduling item {item}")]
    Overflow { item: usize },

    #[error("enumeration needs {required} assignments but the budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
