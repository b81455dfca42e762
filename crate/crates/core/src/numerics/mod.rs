//! Exact rationals, context-bound binary floats, and the constants built on them.

mod consts;
mod rational;
mod real;

pub use consts::{atan_inv, atanh_inv, const_log2, const_pi, ln_rational};
pub use rational::{rat_arith, RatOp, Rational};
pub use real::{parse_decimal, PrecisionContext, Real};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericsError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent must be an integer")]
    NonIntegerExponent,
    #[error("cannot parse number `{0}`")]
    Parse(String),
    #[error("operands carry different precision contexts")]
    ContextMismatch,
    #[error("precision of {0} digits is below the minimum of 15")]
    PrecisionTooLow(u32),
    #[error("logarithm of a non-positive number")]
    LogDomain,
}
