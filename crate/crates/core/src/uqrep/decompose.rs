//! Singular vectors, submodule generation and decomposition.

use std::collections::{BTreeMap, VecDeque};

use super::index::{Generator, Weight};
use super::module::RepModule;
use super::RepError;
use crate::linalg::elim::{kernel_sparse, sparse_from_dense};
use crate::linalg::{Matrix, Parity, Span, SparseVec};
use crate::scalars::Q;

/// `M v` for a sparse `v`.
pub fn apply_sparse(m: &Matrix, v: &SparseVec) -> SparseVec {
    let mut acc = vec![Q::zero(); m.rows()];
    for (j, x) in v {
        for (i, slot) in acc.iter_mut().enumerate() {
            let a = m.get(i, *j);
            if !a.is_zero() {
                *slot += &(a * x);
            }
        }
    }
    sparse_from_dense(&acc)
}

/// Joint kernel of `ops`, weight space by weight space, highest weight first.
pub fn singular_vectors(m: &RepModule, ops: &[Generator]) -> Vec<(Weight, SparseVec)> {
    let mut out = Vec::new();
    for (w, cols) in m.weight_spaces().into_iter().rev() {
        let mut rows: Vec<SparseVec> = Vec::new();
        for &g in ops {
            let a = m.act(g);
            for i in 0..m.dim() {
                let row: SparseVec = cols
                    .iter()
                    .enumerate()
                    .filter_map(|(c, &j)| {
                        let x = a.get(i, j);
                        (!x.is_zero()).then(|| (c, x.clone()))
                    })
                    .collect();
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
        for k in kernel_sparse(&rows, cols.len()) {
            let v = k.into_iter().map(|(c, x)| (cols[c], x)).collect();
            out.push((w.clone(), v));
        }
    }
    out
}

pub fn highest_weight_vectors(m: &RepModule) -> Vec<(Weight, SparseVec)> {
    singular_vectors(m, &m.idx().raising())
}

pub fn lowest_weight_vectors(m: &RepModule) -> Vec<(Weight, SparseVec)> {
    singular_vectors(m, &m.idx().lowering())
}

/// Weight of a weight-homogeneous nonzero vector.
pub fn vector_weight(m: &RepModule, v: &SparseVec) -> Weight {
    let w = m.weight(v[0].0);
    debug_assert!(v.iter().all(|(i, _)| m.weight(*i) == w));
    w.clone()
}

fn vector_parity(m: &RepModule, v: &SparseVec) -> Parity {
    let p = m.parity(v[0].0);
    debug_assert!(v.iter().all(|(i, _)| m.parity(*i) == p));
    p
}

/// Submodule spanned by words applied to seed vectors, with the basis
/// chosen in breadth-first order. Lowering generators are tried before
/// raising ones.
#[derive(Clone, Debug)]
pub struct Generated {
    pub basis: Vec<SparseVec>,
    spans: BTreeMap<Weight, (Span, Vec<usize>)>,
}

impl Generated {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a weight vector of the ambient module in this basis.
    pub fn coords(&self, w: &Weight, v: &SparseVec) -> Option<SparseVec> {
        if v.is_empty() {
            return Some(Vec::new());
        }
        let (span, ids) = self.spans.get(w)?;
        let mut c: SparseVec = span.coords(v)?.into_iter().map(|(k, x)| (ids[k], x)).collect();
        c.sort_by_key(|(i, _)| *i);
        Some(c)
    }
}

pub fn generate(m: &RepModule, seeds: &[SparseVec]) -> Generated {
    let idx = m.idx();
    let mut order: Vec<Generator> = idx.lowering();
    order.extend(idx.raising());
    let mut g = Generated {
        basis: Vec::new(),
        spans: BTreeMap::new(),
    };
    let mut queue = VecDeque::new();
    let offer = |g: &mut Generated, v: SparseVec, queue: &mut VecDeque<usize>| {
        if v.is_empty() {
            return;
        }
        let w = vector_weight(m, &v);
        let (span, ids) = g.spans.entry(w).or_insert_with(|| (Span::new(), Vec::new()));
        if span.insert(&v).is_some() {
            ids.push(g.basis.len());
            queue.push_back(g.basis.len());
            g.basis.push(v);
        }
    };
    for s in seeds {
        offer(&mut g, s.clone(), &mut queue);
    }
    while let Some(i) = queue.pop_front() {
        for &x in &order {
            let v = apply_sparse(m.act(x), &g.basis[i]);
            offer(&mut g, v, &mut queue);
        }
    }
    g
}

/// The submodule as a module in its own generated basis.
pub fn submodule(m: &RepModule, g: &Generated, provenance: impl Into<String>) -> RepModule {
    let idx = m.idx();
    let d = g.dim();
    let weights: Vec<Weight> = g.basis.iter().map(|v| vector_weight(m, v)).collect();
    let parity: Vec<Parity> = g.basis.iter().map(|v| vector_parity(m, v)).collect();
    let image = |x: Generator| {
        let mut out = Matrix::zeros(d, d);
        for (j, b) in g.basis.iter().enumerate() {
            let v = apply_sparse(m.act(x), b);
            if v.is_empty() {
                continue;
            }
            let w = vector_weight(m, &v);
            let c = g.coords(&w, &v).expect("generated span is stable");
            for (i, val) in c {
                out.set(i, j, val);
            }
        }
        out
    };
    RepModule::from_weights(idx, crate::linalg::GradedSpace::new(parity), &weights, image, provenance)
        .expect("generated basis consists of weight vectors")
}

#[derive(Clone, Debug)]
pub struct Summand {
    pub highest_weight: Weight,
    /// Parity of the highest-weight vector.
    pub parity: Parity,
    pub module: RepModule,
    /// Basis of the summand inside the parent module.
    pub embedding: Vec<SparseVec>,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub dim: usize,
    pub summands: Vec<Summand>,
    pub residue_dim: usize,
}

impl Decomposition {
    pub fn completely_reducible(&self) -> bool {
        self.residue_dim == 0
    }
}

/// Irreducible summands generated by singular vectors, highest weight first.
/// Singular vectors whose submodule is reducible, or meets the summands
/// found so far, contribute to the residue instead.
pub fn decompose(m: &RepModule) -> Decomposition {
    let mut total = Span::new();
    let mut summands = Vec::new();
    for (w, v) in highest_weight_vectors(m) {
        if total.contains(&v) {
            continue;
        }
        let g = generate(m, std::slice::from_ref(&v));
        let name = format!("{}[hw={}]", m.provenance(), w);
        let sub = submodule(m, &g, name);
        if highest_weight_vectors(&sub).len() != 1 {
            continue;
        }
        let mut trial = total.clone();
        if g.basis.iter().all(|b| trial.insert(b).is_some()) {
            total = trial;
            summands.push(Summand {
                highest_weight: w,
                parity: vector_parity(m, &v),
                module: sub,
                embedding: g.basis,
            });
        }
    }
    let used: usize = summands.iter().map(|s| s.module.dim()).sum();
    Decomposition {
        dim: m.dim(),
        residue_dim: m.dim() - used,
        summands,
    }
}

/// The unique lowest weight of an irreducible module.
pub fn lowest_weight(w: &RepModule) -> Result<Weight, RepError> {
    let low = lowest_weight_vectors(w);
    if low.len() != 1 || highest_weight_vectors(w).len() != 1 {
        return Err(RepError::NotIrreducible);
    }
    Ok(low[0].0.clone())
}

/// Dimension of the space of even module maps `T: W → M`.
pub fn hom_dim(w: &RepModule, m: &RepModule, gens: &[Generator]) -> usize {
    let pairs: Vec<(usize, usize)> = (0..m.dim())
        .flat_map(|i| (0..w.dim()).map(move |j| (i, j)))
        .filter(|&(i, j)| m.parity(i) == w.parity(j) && m.weight(i) == w.weight(j))
        .collect();
    let col: BTreeMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(c, p)| (*p, c)).collect();
    let mut rows = Vec::new();
    for &g in gens {
        let (wg, mg) = (w.act(g), m.act(g));
        let mut eqs: BTreeMap<(usize, usize), BTreeMap<usize, Q>> = BTreeMap::new();
        // (T W(g))_{ij} = Σ_b T_{ib} W(g)_{bj}
        for (b, j, x) in wg.nonzeros() {
            for i in 0..m.dim() {
                if let Some(&c) = col.get(&(i, b)) {
                    *eqs.entry((i, j)).or_default().entry(c).or_insert_with(Q::zero) += x;
                }
            }
        }
        // (M(g) T)_{ij} = Σ_a M(g)_{ia} T_{aj}
        for (i, a, x) in mg.nonzeros() {
            for j in 0..w.dim() {
                if let Some(&c) = col.get(&(a, j)) {
                    *eqs.entry((i, j)).or_default().entry(c).or_insert_with(Q::zero) -= x;
                }
            }
        }
        for (_, r) in eqs {
            let r: SparseVec = r.into_iter().filter(|(_, x)| !x.is_zero()).collect();
            if !r.is_empty() {
                rows.push(r);
            }
        }
    }
    pairs.len() - crate::linalg::elim::rank_sparse(&rows, pairs.len())
}
