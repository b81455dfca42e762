//! Brute-force ground truth for the identity catalog.
//!
//! Everything here is deliberately slow: harmonic numbers are re-summed on
//! every use, double sums are literal nested loops, nothing is cached. The
//! point is to be obviously correct, so that the fast evaluator in
//! `harmid-core` can be checked against it. Nothing in `harmid-core` depends
//! on this crate.

mod gen;
mod master;
mod naive;
mod random;

pub use gen::random_expr;
pub use master::{
    check_corollaries, check_master_identity, corollary_factorable, corollary_partial_sums, corollary_square,
    corollary_symmetric, master_sides,
};
pub use naive::{naive_eval, naive_lhs, naive_partial_lhs, OracleError};
pub use random::{rng, RandomSequenceSpec, DEFAULT_SEED, MAX_DEN, MAX_NUM};
