//! `Hom_g(W, E(V)) ≅ Hom_k(W, V)`, both sides computed independently.

use serde::Serialize;

use super::induced::{block_words, induce, BlockDim};
use super::parabolic::{ParabolicSpec, Subalgebra};
use super::HomError;
use crate::uqrep::{hom_dim, RepModule};

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusReport {
    pub m: usize,
    pub n: usize,
    pub theta: Vec<usize>,
    pub w: String,
    pub v: String,
    pub degree: usize,
    pub blocks: Vec<BlockDim>,
    pub induced_dim: usize,
    pub conditions_hold: bool,
    pub l_stable: bool,
    pub hom_g: usize,
    pub hom_k: usize,
    pub passed: bool,
}

/// `E(V)` is truncated to the matrix coefficients of `E^k ⊗ Ebar^l`,
/// `k + l ≤ degree`.
pub fn frobenius(p: &ParabolicSpec, w: &RepModule, v: &RepModule, degree: usize) -> Result<FrobeniusReport, HomError> {
    let idx = p.idx();
    let vk = p.restrict(v, Subalgebra::Levi);
    let s_k = p.s_k();
    let words = block_words(degree);
    let mut blocks = Vec::new();
    for word in &words {
        let (k, l) = word.bidegree();
        let one = induce(&vk, &s_k, std::slice::from_ref(word))?;
        blocks.push(BlockDim { k, l, dim: one.dim() });
    }
    let space = induce(&vk, &s_k, &words)?;
    let hom_g = space.module.as_ref().map_or(0, |e| hom_dim(w, e, &idx.generators()));
    let hom_k = hom_dim(w, &vk, &s_k);
    Ok(FrobeniusReport {
        m: idx.m(),
        n: idx.n(),
        theta: p.theta().iter().copied().collect(),
        w: w.provenance().to_string(),
        v: v.provenance().to_string(),
        degree,
        blocks,
        induced_dim: space.dim(),
        conditions_hold: space.conditions_hold,
        l_stable: space.l_stable(),
        passed: space.conditions_hold && space.l_stable() && hom_g == hom_k,
        hom_g,
        hom_k,
    })
}
