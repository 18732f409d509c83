//! Representations of the quantum general linear superalgebra.

pub mod cache;
pub mod convention;
pub mod decompose;
pub mod index;
pub mod lambda;
pub mod module;
pub mod word;

pub use convention::{Convention, Side};
pub use decompose::{decompose, hom_dim, Decomposition, Summand};
pub use index::{Generator, SuperIndex, UElement, Weight};
pub use lambda::{dagger, enumerate_lambda, Variance};
pub use module::RepModule;
pub use word::{Factor, TensorWord};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("gl({m}|{n}) needs m, n >= 1")]
    BadIndex { m: usize, n: usize },
    #[error("coproduct convention has not been calibrated")]
    NotCalibrated,
    #[error("a different convention was already published")]
    ConventionConflict,
    #[error("Cartan generators are not diagonal monomials on this basis")]
    NotWeightBasis,
    #[error("action matrices have inconsistent shapes")]
    Shape,
    #[error("module is not irreducible")]
    NotIrreducible,
    #[error("weight {0} not found among enumerated highest weights")]
    NotInLambda(Weight),
    #[error("malformed tensor word `{0}`")]
    BadWord(String),
}
