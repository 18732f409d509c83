//! R-matrices, convention calibration and the Yang–Baxter check.

pub mod calibrate;
pub mod intertwiner;
pub mod yang_baxter;

pub use calibrate::{calibrate_coproduct, ensure_calibrated, CalibrationReport};
pub use intertwiner::{build_r_pibar_pi, check_intertwiner, solve_intertwiner, RMatrix};
pub use yang_baxter::{check_yang_baxter, hecke_relation};

use thiserror::Error;

use crate::uqrep::RepError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RmatrixError {
    #[error("no convention in the declared family passes: {residuals:?}")]
    NoPassingConvention { residuals: Vec<String> },
    #[error("operator does not match the tensor space")]
    DimensionMismatch,
    #[error(transparent)]
    Rep(#[from] RepError),
}
