//! Exact arithmetic in Q(q).

pub mod modp;
mod poly;
mod rational;

pub use poly::IntPoly;
pub use rational::RationalScalar;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("inverse of zero")]
    InverseOfZero,
    #[error("denominator vanishes at q0={q0} mod {p}; retry with another point")]
    Pole { q0: u64, p: u64 },
}

/// Shorthand used throughout the crate.
pub type Q = RationalScalar;
