use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("precondition unmet: {0}")]
    Precondition(String),
    #[error("truncation insufficient: need level {needed}, have {available}")]
    Truncation { needed: usize, available: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
