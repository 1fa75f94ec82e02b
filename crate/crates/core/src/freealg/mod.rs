//! Exact arithmetic in the free noncommutative polynomial algebra Q⟨a,b⟩
//! and its truncated extension Q⟨a,b⟩[t]/(t^N).
//!
//! Everything in here is exact: coefficients are arbitrary-precision
//! rationals and no operation ever rounds. All values are immutable after
//! construction, so they can be shared freely across threads.

mod poly;
mod rational;
mod series;
mod word;

pub(crate) use poly::sum_a_b_ab;
pub use poly::NcPoly;
pub use rational::Rational;
pub use series::TSeries;
pub use word::{Letter, Word, MAX_WORD_LEN};

use thiserror::Error;

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FreeAlgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("degree of zero undefined")]
    DegreeOfZero,
    #[error("not invertible mod t^N: constant term must be the unit")]
    NotInvertible,
    #[error("empty truncation: derivative of an order-1 series has order 0")]
    EmptyTruncation,
    #[error("parse error: {0}")]
    Parse(String),
}
