//! Products and Peter–Weyl canonical form.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use serde::Serialize;

use super::element::{GqElement, MatrixCoefficient};
use super::frame::Frame;
use super::registry::{irrep, module_of, reduction, ModuleKey};
use super::signs::{self, words_up_to, ProductSign};
use super::CoordError;
use crate::linalg::elim::{kernel_sparse, rank_sparse};
use crate::linalg::{Matrix, SparseVec};
use crate::scalars::Q;
use crate::uqrep::{cache, Generator, RepModule, SuperIndex, TensorWord, Weight};

/// A Peter–Weyl form; `unreduced` lists word modules that are not
/// completely reducible and were kept as they are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub element: GqElement,
    pub unreduced: BTreeSet<TensorWord>,
}

/// Rewrite irrep-keyed terms on the word module they were extracted from.
pub fn lift(f: &GqElement) -> Result<GqElement, CoordError> {
    let idx = f.idx();
    let mut out = GqElement::zero(idx);
    for (mc, c) in f.terms() {
        match &mc.module {
            ModuleKey::Word(_) => out.add_term(mc.clone(), c.clone()),
            ModuleKey::Irrep(hw) => {
                let rec = irrep(idx, hw)?;
                let key = ModuleKey::Word(rec.parent.clone());
                let d = rec.embedding.rows();
                // π_S(x) = P π_M(x) E
                for i in 0..d {
                    let p = rec.projection.get(mc.row, i);
                    if p.is_zero() {
                        continue;
                    }
                    for j in 0..d {
                        let e = rec.embedding.get(j, mc.col);
                        if e.is_zero() {
                            continue;
                        }
                        let term = MatrixCoefficient {
                            module: key.clone(),
                            row: i,
                            col: j,
                        };
                        out.add_term(term, &(p * e) * c);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Rewrite word terms on the canonical irreps of their decomposition.
pub fn reduce(f: &GqElement) -> Result<Canonical, CoordError> {
    let idx = f.idx();
    let mut element = GqElement::zero(idx);
    let mut unreduced = BTreeSet::new();
    for (mc, c) in f.terms() {
        let ModuleKey::Word(w) = &mc.module else {
            element.add_term(mc.clone(), c.clone());
            continue;
        };
        let Some(red) = reduction(idx, w)? else {
            unreduced.insert(w.clone());
            element.add_term(mc.clone(), c.clone());
            continue;
        };
        // π_M(x) = Σ_s E_s π_s(x) P_s
        for (hw, emb, proj) in &red.summands {
            for p in 0..emb.cols() {
                let e = emb.get(mc.row, p);
                if e.is_zero() {
                    continue;
                }
                for r in 0..proj.rows() {
                    let q = proj.get(r, mc.col);
                    if q.is_zero() {
                        continue;
                    }
                    let term = MatrixCoefficient {
                        module: ModuleKey::Irrep(hw.clone()),
                        row: p,
                        col: r,
                    };
                    element.add_term(term, &(e * q) * c);
                }
            }
        }
    }
    Ok(Canonical { element, unreduced })
}

fn concat(a: &TensorWord, b: &TensorWord) -> TensorWord {
    TensorWord(a.0.iter().chain(&b.0).copied().collect())
}

/// Product on the tensor word modules, before canonicalization.
pub fn multiply_raw(f: &GqElement, g: &GqElement, sign: ProductSign) -> Result<GqElement, CoordError> {
    let idx = f.idx();
    let (f, g) = (lift(f)?, lift(g)?);
    let mut out = GqElement::zero(idx);
    for (a, x) in f.terms() {
        let ModuleKey::Word(wa) = &a.module else { unreachable!() };
        let ma = module_of(idx, &a.module)?;
        for (b, y) in g.terms() {
            let ModuleKey::Word(wb) = &b.module else { unreachable!() };
            let mb = module_of(idx, &b.module)?;
            let d = mb.dim();
            let flip = sign.flips(ma.parity(a.row), ma.parity(a.col), mb.parity(b.row), mb.parity(b.col));
            let c = x * y;
            let term = MatrixCoefficient {
                module: ModuleKey::Word(concat(wa, wb)),
                row: a.row * d + b.row,
                col: a.col * d + b.col,
            };
            out.add_term(term, if flip { -c } else { c });
        }
    }
    Ok(out)
}

/// Product with the calibrated sign, in Peter–Weyl form.
pub fn multiply(f: &GqElement, g: &GqElement) -> Result<GqElement, CoordError> {
    let sign = signs::ensure()?.product;
    Ok(reduce(&multiply_raw(f, g, sign)?)?.element)
}

#[derive(Clone, Debug, Serialize)]
pub struct IrrepEntry {
    pub highest_weight: Weight,
    pub dim: usize,
    pub source: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct IndependenceReport {
    pub m: usize,
    pub n: usize,
    pub kmax: usize,
    pub lmax: usize,
    pub word_length: usize,
    pub words: usize,
    pub irreps: Vec<IrrepEntry>,
    pub coefficients: usize,
    pub rank: usize,
    pub passed: bool,
    /// A vanishing combination `(irrep index, row, col, coefficient)` on failure.
    pub dependency: Vec<(usize, usize, usize, String)>,
}

/// Evaluate every matrix coefficient of the distinct irreducible summands of
/// `E^k ⊗ Ebar^l` (`k ≤ kmax`, `l ≤ lmax`) on all words up to `word_length`
/// and check the evaluation matrix has full row rank.
pub fn check_independence(
    idx: SuperIndex,
    kmax: usize,
    lmax: usize,
    word_length: usize,
) -> Result<IndependenceReport, CoordError> {
    let mut mods: Vec<(Weight, RepModule, String)> = Vec::new();
    for k in 0..=kmax {
        for l in 0..=lmax {
            let word = TensorWord::block(k, l);
            let d = cache::decomposition(idx, &word)?;
            for s in &d.summands {
                let dup = mods.iter().any(|(hw, m, _)| {
                    hw == &s.highest_weight && idx.generators().into_iter().all(|g| m.act(g) == s.module.act(g))
                });
                if !dup {
                    mods.push((s.highest_weight.clone(), s.module.clone(), word.to_string()));
                }
            }
        }
    }
    let gens = idx.generators();
    let words = words_up_to(&gens, word_length);
    // Evaluations of each module on each word, built along prefixes.
    let mut coeff_index: Vec<(usize, usize, usize)> = Vec::new();
    for (t, (_, m, _)) in mods.iter().enumerate() {
        for i in 0..m.dim() {
            for j in 0..m.dim() {
                coeff_index.push((t, i, j));
            }
        }
    }
    let mut columns: Vec<SparseVec> = Vec::with_capacity(words.len());
    let mut images: HashMap<Vec<Generator>, Vec<Matrix>> = HashMap::new();
    for w in &words {
        let mats: Vec<Matrix> = match w.split_last() {
            None => mods.iter().map(|(_, m, _)| Matrix::identity(m.dim())).collect(),
            Some((g, rest)) => images[rest].iter().zip(&mods).map(|(a, (_, m, _))| a * m.act(*g)).collect(),
        };
        let col: SparseVec = coeff_index
            .iter()
            .enumerate()
            .filter_map(|(r, &(t, i, j))| {
                let x = mats[t].get(i, j);
                (!x.is_zero()).then(|| (r, x.clone()))
            })
            .collect();
        columns.push(col);
        images.insert(w.clone(), mats);
    }
    // Row rank of the coefficient × word matrix equals the rank of its columns.
    let rank = rank_sparse(&columns, coeff_index.len());
    let passed = rank == coeff_index.len();
    let mut dependency = Vec::new();
    if !passed {
        if let Some(v) = kernel_sparse(&columns, coeff_index.len()).first() {
            dependency = v
                .iter()
                .map(|(r, c)| {
                    let (t, i, j) = coeff_index[*r];
                    (t, i, j, c.to_string())
                })
                .collect();
        }
    }
    Ok(IndependenceReport {
        m: idx.m(),
        n: idx.n(),
        kmax,
        lmax,
        word_length,
        words: words.len(),
        irreps: mods
            .iter()
            .map(|(hw, m, src)| IrrepEntry {
                highest_weight: hw.clone(),
                dim: m.dim(),
                source: src.clone(),
            })
            .collect(),
        coefficients: coeff_index.len(),
        rank,
        passed,
        dependency,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorizationReport {
    pub k: usize,
    pub l: usize,
    pub t_then_tbar: usize,
    pub tbar_then_t: usize,
    pub union: usize,
    pub passed: bool,
}

/// Compare the span of products of `k` t's followed by `l` t̄'s with the span
/// of the reversed products. Such products are (up to sign) the matrix
/// coefficients of `E^k ⊗ Ebar^l` and `Ebar^l ⊗ E^k`, so the spans are
/// measured through frames.
pub fn mixed_factorization(idx: SuperIndex, k: usize, l: usize) -> Result<FactorizationReport, CoordError> {
    let a = cache::module(idx, &TensorWord::block(k, l))?;
    let rev = TensorWord(
        std::iter::repeat_n(crate::uqrep::Factor::Ebar, l)
            .chain(std::iter::repeat_n(crate::uqrep::Factor::E, k))
            .collect(),
    );
    let b = cache::module(idx, &rev)?;
    let da = Frame::new(vec![a.clone()]).dim();
    let db = Frame::new(vec![b.clone()]).dim();
    let du = Frame::new(vec![a, b]).dim();
    Ok(FactorizationReport {
        k,
        l,
        t_then_tbar: da,
        tbar_then_t: db,
        union: du,
        passed: da == db && db == du,
    })
}

/// Frame coordinates of an element whose terms live on the frame's modules,
/// keyed by `(slot, coordinate)`.
pub fn frame_coords(
    frame: &Frame,
    modules: &HashMap<ModuleKey, usize>,
    f: &GqElement,
) -> Option<std::collections::BTreeMap<(super::frame::SlotKey, usize), Q>> {
    let mut out: std::collections::BTreeMap<(super::frame::SlotKey, usize), Q> = Default::default();
    for (mc, c) in f.terms() {
        let t = *modules.get(&mc.module)?;
        let key = frame.slot_of(t, mc.row, mc.col);
        for (i, x) in frame.coords(t, mc.row, mc.col) {
            let e = out.entry((key.clone(), i)).or_insert_with(Q::zero);
            *e += &(&x * c);
        }
    }
    out.retain(|_, v| !v.is_zero());
    Some(out)
}

pub fn frame_of(modules: &[Arc<RepModule>]) -> Frame {
    Frame::new(modules.to_vec())
}
