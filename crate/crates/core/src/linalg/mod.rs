//! Z/2-graded linear algebra over Q(q).

pub mod elim;
pub mod graded;
pub mod matrix;

pub use elim::{kernel, rank, solve, Span, SparseVec};
pub use graded::{graded_kron, supertranspose, GradedOperator, GradedSpace, Parity};
pub use matrix::Matrix;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected:?}, found {found:?}")]
    DimensionMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("entry ({row},{col}) violates the operator parity")]
    ParityViolation { row: usize, col: usize },
    #[error("sum of operators with different parity")]
    MixedParity,
    #[error("operator is not square")]
    NotSquare,
}
