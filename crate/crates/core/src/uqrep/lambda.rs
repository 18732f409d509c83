//! The highest-weight sets of tensor irreps and the dagger map.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::cache;
use super::decompose::{lowest_weight, Summand};
use super::index::{SuperIndex, Weight};
use super::word::{Factor, TensorWord};
use super::RepError;

/// Contravariant irreps live in powers of `E`, covariant ones in powers of `Ebar`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variance {
    Contravariant,
    Covariant,
}

impl Variance {
    fn factor(self) -> Factor {
        match self {
            Variance::Contravariant => Factor::E,
            Variance::Covariant => Factor::Ebar,
        }
    }

    pub fn other(self) -> Variance {
        match self {
            Variance::Contravariant => Variance::Covariant,
            Variance::Covariant => Variance::Contravariant,
        }
    }

    /// Tensor degree in which a weight of this variance must occur.
    pub fn degree_of(self, w: &Weight) -> Option<usize> {
        let t = match self {
            Variance::Contravariant => w.total(),
            Variance::Covariant => -w.total(),
        };
        usize::try_from(t).ok()
    }
}

/// All highest weights of irreducible summands of `X^{⊗j}`, `j ≤ k`,
/// including the trivial weight.
pub fn enumerate_lambda(idx: SuperIndex, k: usize, side: Variance) -> Result<BTreeSet<Weight>, RepError> {
    let mut out = BTreeSet::new();
    out.insert(idx.zero_weight());
    for j in 1..=k {
        let d = cache::decomposition(idx, &TensorWord::power(side.factor(), j))?;
        out.extend(d.summands.iter().map(|s| s.highest_weight.clone()));
    }
    Ok(out)
}

/// The irrep of highest weight `lambda` inside the appropriate tensor power.
pub fn irrep(idx: SuperIndex, lambda: &Weight, side: Variance) -> Result<Summand, RepError> {
    let not_found = || RepError::NotInLambda(lambda.clone());
    let deg = side.degree_of(lambda).ok_or_else(not_found)?;
    let word = TensorWord::power(side.factor(), deg);
    let d = cache::decomposition(idx, &word)?;
    d.summands
        .iter()
        .find(|s| &s.highest_weight == lambda)
        .cloned()
        .ok_or_else(not_found)
}

/// `λ† = −(lowest weight of W(λ))`.
pub fn dagger(idx: SuperIndex, lambda: &Weight, side: Variance) -> Result<Weight, RepError> {
    let s = irrep(idx, lambda, side)?;
    Ok(lowest_weight(&s.module)?.neg())
}
