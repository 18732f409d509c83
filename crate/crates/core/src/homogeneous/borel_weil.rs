//! The spaces `O(μ) ⊂ V ⊗ T̄_q` and `Ō(μ) ⊂ V ⊗ T_q` and their comparison
//! with the predicted tensor irreps.

use serde::Serialize;

use super::induced::{induce, BlockDim, InducedSpace};
use super::parabolic::{ParabolicSign, ParabolicSpec, Subalgebra};
use super::HomError;
use crate::uqrep::lambda::irrep;
use crate::uqrep::{dagger, decompose, enumerate_lambda, RepModule, SuperIndex, TensorWord, Variance, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Space {
    /// Inside `V ⊗ T̄_q`.
    O,
    /// Inside `V ⊗ T_q`.
    Obar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Match,
    Mismatch,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct Found {
    pub dim: usize,
    pub highest_weights: Vec<Weight>,
    pub irreducible: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub space: Space,
    pub sign: ParabolicSign,
    pub rule: String,
    pub predicted: Option<Weight>,
    pub predicted_dim: usize,
    pub blocks: Vec<BlockDim>,
    pub found: Found,
    pub conditions_hold: bool,
    pub l_stable: bool,
    /// Set when the answer is zero: it is certified only up to this degree.
    pub zero_up_to: Option<usize>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct BorelWeilReport {
    pub m: usize,
    pub n: usize,
    pub theta: Vec<usize>,
    pub mu: Weight,
    pub mu_tilde: Weight,
    pub degree: usize,
    pub rows: Vec<Row>,
}

impl BorelWeilReport {
    pub fn verdicts(&self) -> impl Iterator<Item = Verdict> + '_ {
        self.rows.iter().map(|r| r.verdict)
    }
}

fn in_lambda(idx: SuperIndex, w: &Weight, side: Variance) -> Result<bool, HomError> {
    match side.degree_of(w) {
        Some(d) => Ok(enumerate_lambda(idx, d, side)?.contains(w)),
        None => Ok(false),
    }
}

/// The predicted highest weight (`None` for the zero module) and the rule used.
pub fn predict(
    idx: SuperIndex,
    space: Space,
    sign: ParabolicSign,
    mu: &Weight,
    mu_tilde: &Weight,
) -> Result<(Option<Weight>, String), HomError> {
    use Variance::{Contravariant as C1, Covariant as C2};
    let neg = mu_tilde.neg();
    let found = match (space, sign) {
        (Space::O, ParabolicSign::Minus) if in_lambda(idx, mu, C1)? => Some((mu.clone(), "mu in Lambda1")),
        (Space::O, ParabolicSign::Plus) if in_lambda(idx, &neg, C2)? => {
            Some((dagger(idx, &neg, C2)?, "-mu_tilde in Lambda2, W((-mu_tilde)^dagger)"))
        }
        (Space::Obar, ParabolicSign::Minus) if in_lambda(idx, mu, C2)? => Some((mu.clone(), "mu in Lambda2")),
        (Space::Obar, ParabolicSign::Plus) if in_lambda(idx, &neg, C1)? => {
            Some((dagger(idx, &neg, C1)?, "-mu_tilde in Lambda1, W((-mu_tilde)^dagger)"))
        }
        _ => None,
    };
    Ok(match found {
        Some((w, rule)) => (Some(w), rule.to_string()),
        None => (None, "otherwise".to_string()),
    })
}

fn irrep_dim(idx: SuperIndex, w: &Weight) -> Result<usize, HomError> {
    for side in [Variance::Contravariant, Variance::Covariant] {
        if in_lambda(idx, w, side)? {
            return Ok(irrep(idx, w, side)?.module.dim());
        }
    }
    Err(HomError::Rep(crate::uqrep::RepError::NotInLambda(w.clone())))
}

fn words(space: Space, degree: usize) -> Vec<TensorWord> {
    (0..=degree)
        .map(|d| match space {
            Space::O => TensorWord::block(0, d),
            Space::Obar => TensorWord::block(d, 0),
        })
        .collect()
}

/// Solve the strengthened conditions for all of `S_p±` up to `degree`.
pub fn o_space(
    p: &ParabolicSpec,
    v: &RepModule,
    space: Space,
    sign: ParabolicSign,
    degree: usize,
) -> Result<(InducedSpace, Vec<BlockDim>), HomError> {
    let vp = p.restrict(v, Subalgebra::Parabolic(sign));
    let conds = p.s_p(sign);
    let ws = words(space, degree);
    let mut blocks = Vec::new();
    for w in &ws {
        let (k, l) = w.bidegree();
        let one = induce(&vp, &conds, std::slice::from_ref(w))?;
        blocks.push(BlockDim { k, l, dim: one.dim() });
    }
    Ok((induce(&vp, &conds, &ws)?, blocks))
}

fn found_of(space: &InducedSpace) -> Found {
    match &space.module {
        Some(m) if m.dim() > 0 => {
            let d = decompose(m);
            Found {
                dim: m.dim(),
                highest_weights: d.summands.iter().map(|s| s.highest_weight.clone()).collect(),
                irreducible: d.summands.len() == 1 && d.completely_reducible(),
            }
        }
        _ => Found {
            dim: space.dim(),
            highest_weights: Vec::new(),
            irreducible: false,
        },
    }
}

/// Compare all four spaces (`O`, `Ō` × `p+`, `p−`) with the prediction.
/// A predicted nonzero module that is not found and would need matrix
/// coefficients of degree above `degree` is reported as inconclusive.
pub fn borel_weil_report(p: &ParabolicSpec, mu: &Weight, degree: usize) -> Result<BorelWeilReport, HomError> {
    let idx = p.idx();
    let v = p.k_irrep(mu)?;
    let mu_tilde = p.k_lowest_weight(&v)?;
    let mut rows = Vec::new();
    for space in [Space::O, Space::Obar] {
        for sign in [ParabolicSign::Minus, ParabolicSign::Plus] {
            let (predicted, rule) = predict(idx, space, sign, mu, &mu_tilde)?;
            let predicted_dim = match &predicted {
                Some(w) => irrep_dim(idx, w)?,
                None => 0,
            };
            let (solved, blocks) = o_space(p, &v, space, sign, degree)?;
            let found = found_of(&solved);
            let sound = solved.conditions_hold && solved.l_stable();
            let verdict = match &predicted {
                _ if !sound => Verdict::Mismatch,
                None if found.dim == 0 => Verdict::Match,
                None => Verdict::Mismatch,
                Some(w) if found.irreducible && found.highest_weights == [w.clone()] && found.dim == predicted_dim => {
                    Verdict::Match
                }
                Some(w) if found.dim == 0 && w.total().unsigned_abs() as usize > degree => Verdict::Inconclusive,
                Some(_) => Verdict::Mismatch,
            };
            rows.push(Row {
                space,
                sign,
                rule,
                predicted,
                predicted_dim,
                blocks,
                zero_up_to: (found.dim == 0).then_some(degree),
                found,
                conditions_hold: solved.conditions_hold,
                l_stable: solved.l_stable(),
                verdict,
            });
        }
    }
    Ok(BorelWeilReport {
        m: idx.m(),
        n: idx.n(),
        theta: p.theta().iter().copied().collect(),
        mu: mu.clone(),
        mu_tilde,
        degree,
        rows,
    })
}
