use serde::Serialize;

use super::RmatrixError;
use crate::linalg::elim::kernel_sparse;
use crate::linalg::graded::{graded_kron_matrix, sign};
use crate::linalg::{GradedOperator, GradedSpace, Matrix, SparseVec};
use crate::scalars::Q;
use crate::uqrep::convention::Convention;
use crate::uqrep::module::tensor_action;
use crate::uqrep::{RepModule, SuperIndex};

/// An even invertible operator on a two-factor tensor space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    pub operator: Matrix,
    pub factors: (String, String),
    pub normalization: Q,
}

/// The closed-form operator on `Ebar ⊗ E`:
/// `q^{-Σ_a (-1)^{[a]} e_aa⊗e_aa} - (q - q^{-1}) Σ_{a<b} (-1)^{[a]+[b]+[a][b]} e_ba⊗e_ba`.
pub fn build_r_pibar_pi(idx: SuperIndex) -> RMatrix {
    let n = idx.size();
    let space = idx.space();
    let mut r = Matrix::identity(n * n);
    for a in 0..n {
        r.set(a * n + a, a * n + a, Q::q_pow(-idx.q_exp(a)));
    }
    let hecke = Q::hecke();
    for a in 0..n {
        for b in a + 1..n {
            let (pa, pb) = (idx.parity(a), idx.parity(b));
            let c = hecke.scale_int(-sign(pa ^ pb ^ (pa & pb)));
            let e = GradedOperator::unit(&space, b, a);
            let term = graded_kron_matrix(e.matrix(), space.parities(), e.matrix(), e.parity());
            r = &r + &term.scale(&c);
        }
    }
    RMatrix {
        operator: r,
        factors: ("Ebar".into(), "E".into()),
        normalization: Q::one(),
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Residual {
    pub generator: String,
    pub matrix: String,
    pub max_degree: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IntertwinerReport {
    pub passed: bool,
    pub checked: usize,
    pub residuals: Vec<Residual>,
}

/// `R (A⊗B)(Δg) - (A⊗B)(Δ'g) R` for every generator.
pub fn check_intertwiner(
    r: &Matrix,
    a: &RepModule,
    b: &RepModule,
    conv: &Convention,
) -> Result<IntertwinerReport, RmatrixError> {
    let d = a.dim() * b.dim();
    if r.rows() != d || r.cols() != d {
        return Err(RmatrixError::DimensionMismatch);
    }
    let idx = a.idx();
    let mut residuals = Vec::new();
    let gens = idx.generators();
    for &g in &gens {
        let delta = tensor_action(a, b, &conv.coproduct(g));
        let opp = tensor_action(a, b, &conv.opposite_coproduct(g, &idx));
        let res = &(r * &delta) - &(&opp * r);
        if !res.is_zero() {
            residuals.push(Residual {
                generator: g.to_string(),
                max_degree: res.max_degree(),
                matrix: res.dump(),
            });
        }
    }
    Ok(IntertwinerReport {
        passed: residuals.is_empty(),
        checked: gens.len(),
        residuals,
    })
}

fn even_weight_pairs(space: &GradedSpace, a: &RepModule, b: &RepModule) -> Vec<(usize, usize)> {
    let d = space.dim();
    let wt = |i: usize| a.weight(i / b.dim()).add(b.weight(i % b.dim()));
    let wts: Vec<_> = (0..d).map(wt).collect();
    (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .filter(|&(i, j)| space.parity(i) == space.parity(j) && wts[i] == wts[j])
        .collect()
}

/// Basis of the even operators `X` on `A⊗B` with `X Δ(g) = Δ'(g) X`.
pub fn solve_intertwiner(a: &RepModule, b: &RepModule, conv: &Convention) -> Vec<Matrix> {
    let idx = a.idx();
    let space = a.space().tensor(b.space());
    let d = space.dim();
    let pairs = even_weight_pairs(&space, a, b);
    let col = |i: usize, j: usize| pairs.binary_search(&(i, j)).ok();
    let mut rows: Vec<SparseVec> = Vec::new();
    for g in idx.raising().into_iter().chain(idx.lowering()) {
        let delta = tensor_action(a, b, &conv.coproduct(g));
        let opp = tensor_action(a, b, &conv.opposite_coproduct(g, &idx));
        // (X Δ)_{ij} - (Δ' X)_{ij}
        let mut eqs: std::collections::BTreeMap<(usize, usize), std::collections::BTreeMap<usize, Q>> =
            Default::default();
        for (t, j, x) in delta.nonzeros() {
            for i in 0..d {
                if let Some(c) = col(i, t) {
                    *eqs.entry((i, j)).or_default().entry(c).or_insert_with(Q::zero) += x;
                }
            }
        }
        for (i, t, x) in opp.nonzeros() {
            for j in 0..d {
                if let Some(c) = col(t, j) {
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
    kernel_sparse(&rows, pairs.len())
        .into_iter()
        .map(|v| {
            let mut m = Matrix::zeros(d, d);
            for (c, x) in v {
                let (i, j) = pairs[c];
                m.set(i, j, x);
            }
            m
        })
        .collect()
}

/// Whether `target` lies in the span of `basis`.
pub fn in_span(basis: &[Matrix], target: &Matrix) -> bool {
    let flat = |m: &Matrix| -> SparseVec {
        m.nonzeros().map(|(i, j, x)| (i * m.cols() + j, x.clone())).collect()
    };
    let mut span = crate::linalg::Span::new();
    for b in basis {
        span.insert(&flat(b));
    }
    span.contains(&flat(target))
}

/// The triangular member of a solution space, scaled so that its `(0,0)`
/// entry is `lead`. Upper triangular is tried first.
pub fn triangular_member(basis: &[Matrix], lead: &Q) -> Option<Matrix> {
    let d = basis.first()?.rows();
    for upper in [true, false] {
        let mut rows: Vec<SparseVec> = Vec::new();
        for i in 0..d {
            for j in 0..d {
                if (upper && i > j) || (!upper && i < j) {
                    let r: SparseVec = basis
                        .iter()
                        .enumerate()
                        .filter(|(_, m)| !m.get(i, j).is_zero())
                        .map(|(c, m)| (c, m.get(i, j).clone()))
                        .collect();
                    if !r.is_empty() {
                        rows.push(r);
                    }
                }
            }
        }
        let ker = kernel_sparse(&rows, basis.len());
        if ker.len() != 1 {
            continue;
        }
        let mut m = Matrix::zeros(d, d);
        for (c, x) in &ker[0] {
            m = &m + &basis[*c].scale(x);
        }
        let top = m.get(0, 0).clone();
        if top.is_zero() {
            continue;
        }
        return Some(m.scale(&(lead * &top.inv().unwrap())));
    }
    None
}

/// The intertwiner on `E ⊗ E`, triangular and normalised to `q` at `(0,0)`.
pub fn normalized_vector_r(idx: SuperIndex, conv: &Convention) -> Option<RMatrix> {
    let e = RepModule::vector(idx, conv);
    let sols = solve_intertwiner(&e, &e, conv);
    let op = triangular_member(&sols, &Q::q())?;
    Some(RMatrix {
        operator: op,
        factors: ("E".into(), "E".into()),
        normalization: Q::q(),
    })
}
