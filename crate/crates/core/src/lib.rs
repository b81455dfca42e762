//! Exact and high-precision machinery for identities between sums of
//! generalized harmonic numbers.
//!
//! The crate is layered bottom-up: [`numerics`] supplies rationals and
//! context-bound reals, [`special`] and [`harmonic`] build the constants and
//! harmonic primitives, [`sumlang`] parses and evaluates summation
//! expressions, [`series`] sums infinite series with tail correction, and
//! [`registry`] holds the identity catalog checked by all of the above.

pub mod harmonic;
pub mod numerics;
pub mod registry;
pub mod series;
pub mod special;
pub mod sumlang;

pub use numerics::{PrecisionContext, Rational, Real};
