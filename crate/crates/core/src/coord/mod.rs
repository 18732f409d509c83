//! The coordinate superalgebra: matrix coefficients of tensor modules, their
//! pairing with the enveloping algebra, products and the actions `L`, `R`.

pub mod actions;
pub mod element;
pub mod frame;
pub mod peter_weyl;
pub mod registry;
pub mod signs;

pub use actions::{act_l, act_r};
pub use element::{GqElement, MatrixCoefficient, TermDump};
pub use frame::Frame;
pub use peter_weyl::{check_independence, mixed_factorization, multiply, reduce, Canonical};
pub use registry::ModuleKey;
pub use signs::CoordConvention;

use thiserror::Error;

use crate::rmatrix::RmatrixError;
use crate::uqrep::{RepError, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoordError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Rmatrix(#[from] RmatrixError),
    #[error("sign calibration has no unique passing candidate ({0})")]
    SignCalibration(String),
    #[error("two irreps of highest weight {0} have different matrices")]
    CanonicalMismatch(Weight),
    #[error("no tensor irrep of highest weight {0} is known")]
    UnknownIrrep(Weight),
}
