use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("strand count must be at least 2, got {0}")]
    InvalidStrandCount(usize),

    #[error("invalid generator ({a},{b}) for n = {n}")]
    InvalidGenerator { n: u8, a: usize, b: usize },

    #[error("invalid Artin generator s{i} for n = {n}")]
    InvalidArtin { n: u8, i: usize },

    #[error("index sequence {0:?} is not strictly decreasing")]
    InvalidSequence(Vec<u8>),

    #[error("letter {letter} lies outside the range [{hi},{lo}]")]
    ConstraintViolation { letter: String, hi: u8, lo: u8 },

    #[error("state budget of {budget} exceeded")]
    BudgetExceeded { budget: usize },

    #[error("parse error at token {index} (column {column}): {message}")]
    Parse {
        index: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
