//! Shared error type for the library.

use std::fmt;

use num_rational::BigRational;

/// Errors produced by the counting, oracle, Gröbner, and fitting routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument violated a precondition (mismatched lengths, q = 0, r >= q, ...).
    InvalidArgument(String),
    /// The requested computation would exceed an enumeration budget.
    BudgetExceeded { required: u128, budget: u64 },
    /// An interpolated polynomial failed to reproduce a guard sample.
    InterpolationMismatch {
        q: u64,
        expected: Box<BigRational>,
        predicted: Box<BigRational>,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::BudgetExceeded { required, budget } => write!(
                f,
                "enumeration budget exceeded: {required} states requested, budget is {budget}"
            ),
            Error::InterpolationMismatch {
                q,
                expected,
                predicted,
            } => write!(
                f,
                "interpolant fails verification at q = {q}: sample is {expected}, polynomial gives {predicted}"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
