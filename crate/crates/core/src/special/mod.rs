//! Bernoulli and Euler numbers, ζ, η, β, Catalan's constant, polygamma at
//! quarter points and the polylogarithm.

mod numbers;
mod polygamma;
mod polylog;
mod zeta;

pub use numbers::{bernoulli, bernoulli_poly, binomial, euler_number, factorial, TABLE_MAX};
pub use polygamma::{polygamma_base, polygamma_offset_correction, polygamma_parts, polygamma_quarter, QuarterBase};
pub use polylog::polylog;
pub use zeta::{
    alternating_sum_accelerated, beta_const, beta_odd_closed, beta_series, catalan, eta_const, eta_series, zeta,
    zeta_even_closed, zeta_series,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecialError {
    #[error("index {index} is beyond the table bound {max}")]
    OutOfTable { index: u32, max: u32 },
    #[error("polygamma base point {0} is not one of 1/4, 1/2, 3/4, 1")]
    UnsupportedBasePoint(String),
    #[error("{0}")]
    DomainError(String),
    #[error("{0}")]
    InvalidArgument(String),
}
