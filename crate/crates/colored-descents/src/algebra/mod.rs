//! Exact arithmetic substrate: arbitrary-precision binomials and factorials,
//! polynomials in the marker `q` over the rationals, rational functions in `q`,
//! and truncated power series in `x` with rational-function coefficients.
//!
//! Everything here is exact; no floating point anywhere.

mod binom;
mod poly;
mod ratfunc;
mod series;

pub use binom::{binomial, factorial};
pub use poly::QPoly;
pub use ratfunc::QRatFunc;
pub use series::{CoeffOutcome, XSeries};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// Reciprocal of a series whose x^0 coefficient vanishes.
    #[error("series has zero constant term; reciprocal does not exist")]
    ZeroConstantTerm,

    /// Division by the zero polynomial or zero rational function.
    #[error("division by zero")]
    DivisionByZero,

    /// A coefficient that must be an integer polynomial turned out not to be.
    #[error("integrality violation: {0} is not an integer polynomial")]
    IntegralityViolation(String),
}
