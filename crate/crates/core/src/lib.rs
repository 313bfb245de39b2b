//! Macdonald polynomials at the resonance t^{k+1} q^{r−1} = 1, the wheel
//! condition ideal they span, and the dual commuting-current quotients.

pub mod current_algebra;
pub mod linalg;
pub mod macdonald;
pub mod partitions;
pub mod scalars;
pub mod symfunc;
pub mod wheel_ideal;

use thiserror::Error as ThisError;

#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed coefficient fields: {0}")]
    MixedFields(String),
    #[error("pole at specialization: {what}")]
    Pole { what: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("partitions of different sizes: {0} and {1}")]
    UnequalSizes(u32, u32),
    #[error("undefined corner: {0}")]
    UndefinedCorner(String),
    #[error("input is not symmetric: swapping x{0} and x{1} changes it")]
    NotSymmetric(usize, usize),
    #[error("variable counts differ: {0} and {1}")]
    VariableMismatch(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
