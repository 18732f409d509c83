//! Quantum homogeneous superspaces: the invariant subalgebra `A_q`, induced
//! modules `E(V)`, Frobenius reciprocity and the Borel–Weil spaces.

pub mod aq;
pub mod axioms;
pub mod borel_weil;
pub mod frobenius;
pub mod induced;
pub mod parabolic;

pub use aq::{check_closure, invariants_aq, AqBlock, ClosureReport};
pub use axioms::{check_action_axioms, AxiomReport};
pub use borel_weil::{borel_weil_report, o_space, BorelWeilReport, Space, Verdict};
pub use frobenius::{frobenius, FrobeniusReport};
pub use induced::{block_words, induce, BlockDim, InducedContext, InducedSpace, Section};
pub use parabolic::{ParabolicSign, ParabolicSpec, Subalgebra};

use thiserror::Error;

use crate::coord::CoordError;
use crate::rmatrix::RmatrixError;
use crate::uqrep::{RepError, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error(transparent)]
    Coord(#[from] CoordError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Rmatrix(#[from] RmatrixError),
    #[error("root index {root} is outside 1..={max}")]
    BadTheta { root: usize, max: usize },
    #[error("module is not irreducible over the Levi subalgebra")]
    NotKIrreducible,
    #[error("no Levi irrep of highest weight {0} found in small tensor words")]
    NoKIrrep(Weight),
}
