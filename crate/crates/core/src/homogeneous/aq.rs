//! The invariant subalgebra `A_q = {f | R_y f = ε(y) f, y ∈ U_q(k)}`.

use std::collections::HashMap;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::induced::induce;
use super::parabolic::ParabolicSpec;
use super::HomError;
use crate::coord::peter_weyl::{frame_coords, multiply_raw};
use crate::coord::signs;
use crate::coord::{Frame, GqElement, ModuleKey};
use crate::linalg::{Span, SparseVec};
use crate::scalars::Q;
use crate::uqrep::{cache, RepModule, TensorWord};

#[derive(Clone, Debug)]
pub struct AqBlock {
    pub k: usize,
    pub l: usize,
    pub basis: Vec<GqElement>,
}

impl AqBlock {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// `A_q` restricted to the matrix coefficients of `E^k ⊗ Ebar^l`.
pub fn aq_block(p: &ParabolicSpec, k: usize, l: usize) -> Result<AqBlock, HomError> {
    let idx = p.idx();
    let words = [TensorWord::block(k, l)];
    let space = induce(&RepModule::trivial(idx), &p.s_k(), &words)?;
    let basis = space.basis.iter().map(|b| b.component(0, &words, idx)).collect();
    Ok(AqBlock { k, l, basis })
}

pub fn invariants_aq(p: &ParabolicSpec, kmax: usize, lmax: usize) -> Result<Vec<AqBlock>, HomError> {
    let mut out = Vec::new();
    for k in 0..=kmax {
        for l in 0..=lmax {
            out.push(aq_block(p, k, l)?);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    pub samples: usize,
    pub failures: usize,
    pub passed: bool,
}

/// Is `h` in the span of `basis`, all measured in one frame?
fn in_span(basis: &[GqElement], h: &GqElement) -> Result<bool, HomError> {
    let idx = h.idx();
    let mut keys: HashMap<ModuleKey, usize> = HashMap::new();
    let mut modules = Vec::new();
    for f in basis.iter().chain(std::iter::once(h)) {
        for mc in f.terms().keys() {
            if !keys.contains_key(&mc.module) {
                let ModuleKey::Word(w) = &mc.module else {
                    unreachable!("raw products live on words")
                };
                keys.insert(mc.module.clone(), modules.len());
                modules.push(cache::module(idx, w)?);
            }
        }
    }
    if modules.is_empty() {
        return Ok(true);
    }
    let frame = Frame::new(modules);
    let mut index: HashMap<(crate::coord::frame::SlotKey, usize), usize> = HashMap::new();
    let mut vec_of = |f: &GqElement| -> SparseVec {
        let c = frame_coords(&frame, &keys, f).expect("all modules are in the frame");
        let mut v: SparseVec = c
            .into_iter()
            .map(|(k, x)| {
                let next = index.len();
                (*index.entry(k).or_insert(next), x)
            })
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    };
    let mut span = Span::new();
    for b in basis {
        let v = vec_of(b);
        span.insert(&v);
    }
    Ok(span.contains(&vec_of(h)))
}

fn random_combination(rng: &mut ChaCha8Rng, block: &AqBlock) -> GqElement {
    let idx = block.basis[0].idx();
    let mut f = GqElement::zero(idx);
    while f.is_zero() {
        for b in &block.basis {
            let c: i64 = rng.gen_range(-3..=3);
            f = f.add(&b.scale(&Q::from_int(c)));
        }
    }
    f
}

/// Products of random elements of `A_q` blocks with `k, l ≤ kmax, lmax`
/// must lie in the target block `(k₁+k₂, l₁+l₂)`.
pub fn check_closure(
    p: &ParabolicSpec,
    kmax: usize,
    lmax: usize,
    seed: u64,
    samples: usize,
) -> Result<ClosureReport, HomError> {
    let sign = signs::ensure()?.product;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut blocks: HashMap<(usize, usize), AqBlock> = HashMap::new();
    let mut get = |k: usize, l: usize| -> Result<AqBlock, HomError> {
        if let Some(b) = blocks.get(&(k, l)) {
            return Ok(b.clone());
        }
        let b = aq_block(p, k, l)?;
        blocks.insert((k, l), b.clone());
        Ok(b)
    };
    let mut candidates = Vec::new();
    for k in 0..=kmax {
        for l in 0..=lmax {
            if get(k, l)?.dim() > 0 {
                candidates.push((k, l));
            }
        }
    }
    let mut failures = 0;
    for _ in 0..samples {
        let (k1, l1) = candidates[rng.gen_range(0..candidates.len())];
        let (k2, l2) = candidates[rng.gen_range(0..candidates.len())];
        let f = random_combination(&mut rng, &get(k1, l1)?);
        let g = random_combination(&mut rng, &get(k2, l2)?);
        let h = multiply_raw(&f, &g, sign)?;
        let target = get(k1 + k2, l1 + l2)?;
        if !in_span(&target.basis, &h)? {
            failures += 1;
        }
    }
    Ok(ClosureReport {
        samples,
        failures,
        passed: failures == 0,
    })
}
