use alloc::string::String;

use thiserror::Error;

use crate::paths::Variant;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("invalid step character {0:?} (expected one of U, D, H, L)")]
    InvalidStep(char),
    #[error("path {0:?} is not a plain Motzkin excursion")]
    NotExcursion(String),
    #[error("path {0:?} is not a cornerless plain Motzkin excursion")]
    NotCornerlessExcursion(String),
    #[error("a bargraph needs at least one column")]
    EmptyBargraph,
    #[error("bargraph column {index} has height 0; heights must be positive")]
    ZeroHeight { index: usize },
    #[error("cannot parse bargraph column {0:?}")]
    BadColumn(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("length {n} exceeds the enumeration bound {max}; use the unbounded entry point to go further")]
    LengthOutOfBound { n: usize, max: usize },
    #[error("semiperimeter {s} is outside 1..={max}")]
    SemiperimeterOutOfBound { s: usize, max: usize },
    #[error("cannot merge a {0:?} count table with a {1:?} one")]
    VariantMismatch(Variant, Variant),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    /// The divisor's constant coefficient is not a nonzero rational.
    #[error("divisor has non-unit constant term {0}")]
    NonUnitConstant(String),
    #[error("square root needs constant term 1, found {0}")]
    SqrtConstant(String),
    #[error("cannot divide by z^{shift}: coefficient of z^{power} is {value}")]
    NotDivisibleByZ { shift: usize, power: usize, value: String },
    #[error("cannot divide by z^{shift}: series of order {order} is too short")]
    OrderTooLow { shift: usize, order: usize },
    #[error("linear system is singular at the truncation order (pivot {0})")]
    SingularSystem(usize),
    #[error("kernel consistency check failed: {0}")]
    Consistency(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}
