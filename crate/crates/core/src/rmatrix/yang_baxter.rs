use serde::Serialize;

use crate::linalg::graded::{graded_flip, graded_kron_matrix};
use crate::linalg::{GradedSpace, Matrix};
use crate::scalars::Q;
use crate::uqrep::decompose::{apply_sparse, highest_weight_vectors};
use crate::uqrep::RepModule;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct YbeReport {
    pub passed: bool,
    pub dim: usize,
    pub max_degree: usize,
}

/// `R12 R13 R23 - R23 R13 R12` on `X^{⊗3}` for an even `R` on `X ⊗ X`.
pub fn yang_baxter_residual(r: &Matrix, space: &GradedSpace) -> Matrix {
    let d = space.dim();
    let id = Matrix::identity(d);
    let sq = space.tensor(space);
    let r12 = graded_kron_matrix(r, sq.parities(), &id, 0);
    let r23 = graded_kron_matrix(&id, space.parities(), r, 0);
    let p23 = graded_kron_matrix(&id, space.parities(), &graded_flip(space, space), 0);
    let r13 = &(&p23 * &r12) * &p23;
    let lhs = &(&r12 * &r13) * &r23;
    let rhs = &(&r23 * &r13) * &r12;
    &lhs - &rhs
}

pub fn check_yang_baxter(r: &Matrix, space: &GradedSpace) -> YbeReport {
    let res = yang_baxter_residual(r, space);
    YbeReport {
        passed: res.is_zero(),
        dim: res.rows(),
        max_degree: res.max_degree(),
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HeckeReport {
    /// Eigenvalues of the flipped operator on the highest-weight vectors.
    pub eigenvalues: Vec<String>,
    pub passed: bool,
}

/// For `R` on `X ⊗ X`, read the eigenvalues of `Ř = P R` on highest-weight
/// vectors and check that `Ř` satisfies the quadratic they define.
pub fn hecke_relation(r: &Matrix, x: &RepModule, xx: &RepModule) -> HeckeReport {
    let p = graded_flip(x.space(), x.space());
    let rc = &p * r;
    let mut eig: Vec<Q> = Vec::new();
    for (_, v) in highest_weight_vectors(xx) {
        let w = apply_sparse(&rc, &v);
        let (i, x0) = &v[0];
        let c = w
            .iter()
            .find(|(j, _)| j == i)
            .map(|(_, y)| y * &x0.inv().unwrap())
            .unwrap_or_else(Q::zero);
        let scaled: Vec<_> = v.iter().map(|(j, y)| (*j, y * &c)).collect();
        if scaled != w {
            return HeckeReport {
                eigenvalues: Vec::new(),
                passed: false,
            };
        }
        if !eig.contains(&c) {
            eig.push(c);
        }
    }
    let d = rc.rows();
    let mut prod = Matrix::identity(d);
    for c in &eig {
        prod = &prod * &(&rc - &Matrix::scalar(d, c));
    }
    HeckeReport {
        passed: eig.len() == 2 && prod.is_zero(),
        eigenvalues: eig.iter().map(ToString::to_string).collect(),
    }
}
