use super::matrix::Matrix;
use super::LinalgError;
use crate::scalars::Q;

/// A Z/2 grading value, 0 or 1.
pub type Parity = u8;

/// Finite-dimensional Z/2-graded space with a parity-tagged basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    parity: Vec<Parity>,
}

impl GradedSpace {
    pub fn new(parity: Vec<Parity>) -> Self {
        debug_assert!(parity.iter().all(|&p| p < 2));
        GradedSpace { parity }
    }

    /// The space of gl(m|n): `m` even basis vectors followed by `n` odd ones.
    pub fn gl(m: usize, n: usize) -> Self {
        let mut parity = vec![0; m];
        parity.extend(std::iter::repeat(1).take(n));
        GradedSpace { parity }
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    /// Basis of the tensor product, index `i * other.dim() + k`.
    pub fn tensor(&self, other: &GradedSpace) -> GradedSpace {
        let mut parity = Vec::with_capacity(self.dim() * other.dim());
        for &a in &self.parity {
            for &b in &other.parity {
                parity.push(a ^ b);
            }
        }
        GradedSpace { parity }
    }
}

/// `(-1)^e` as a scalar sign.
pub fn sign(e: u8) -> i64 {
    if e & 1 == 1 {
        -1
    } else {
        1
    }
}

/// Koszul-signed Kronecker product of plain matrices.
///
/// Entry `((i,k),(j,l))` is `(-1)^{b_par * col_par_a[j]} A_ij B_kl`.
pub fn graded_kron_matrix(a: &Matrix, col_par_a: &[Parity], b: &Matrix, b_par: Parity) -> Matrix {
    let mut out = Matrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    let bnz: Vec<_> = b.nonzeros().collect();
    for (i, j, x) in a.nonzeros() {
        let flip = b_par & col_par_a[j] == 1;
        for &(k, l, y) in &bnz {
            let v = x * y;
            out.set(i * b.rows() + k, j * b.cols() + l, if flip { -v } else { v });
        }
    }
    out
}

/// `(A^st)_{ab} = (-1)^{[b]([a]+[b])} A_{ba}`.
pub fn supertranspose_matrix(a: &Matrix, parity: &[Parity]) -> Matrix {
    assert!(a.is_square());
    Matrix::from_fn(a.rows(), a.cols(), |i, j| {
        let v = a.get(j, i);
        if parity[j] & (parity[i] ^ parity[j]) == 1 {
            -v
        } else {
            v.clone()
        }
    })
}

/// The graded flip `u ⊗ v ↦ (-1)^{[u][v]} v ⊗ u` from `A ⊗ B` to `B ⊗ A`.
pub fn graded_flip(a: &GradedSpace, b: &GradedSpace) -> Matrix {
    let (da, db) = (a.dim(), b.dim());
    let mut out = Matrix::zeros(da * db, da * db);
    for i in 0..da {
        for k in 0..db {
            let s = sign(a.parity(i) & b.parity(k));
            out.set(k * da + i, i * db + k, Q::from_int(s));
        }
    }
    out
}

/// A parity-homogeneous linear map between graded spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedOperator {
    domain: GradedSpace,
    codomain: GradedSpace,
    parity: Parity,
    matrix: Matrix,
}

impl GradedOperator {
    pub fn new(
        domain: GradedSpace,
        codomain: GradedSpace,
        parity: Parity,
        matrix: Matrix,
    ) -> Result<Self, LinalgError> {
        if matrix.rows() != codomain.dim() || matrix.cols() != domain.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: (codomain.dim(), domain.dim()),
                found: (matrix.rows(), matrix.cols()),
            });
        }
        if let Some((i, j, _)) = matrix
            .nonzeros()
            .find(|&(i, j, _)| codomain.parity(i) != domain.parity(j) ^ parity)
        {
            return Err(LinalgError::ParityViolation { row: i, col: j });
        }
        Ok(GradedOperator {
            domain,
            codomain,
            parity,
            matrix,
        })
    }

    /// Homogeneous operator of whatever parity its nonzero pattern implies.
    /// The zero operator is taken to be even.
    pub fn infer(space: GradedSpace, matrix: Matrix) -> Result<Self, LinalgError> {
        let parity = matrix
            .nonzeros()
            .next()
            .map_or(0, |(i, j, _)| space.parity(i) ^ space.parity(j));
        Self::new(space.clone(), space, parity, matrix)
    }

    pub fn identity(space: &GradedSpace) -> Self {
        GradedOperator {
            domain: space.clone(),
            codomain: space.clone(),
            parity: 0,
            matrix: Matrix::identity(space.dim()),
        }
    }

    /// Matrix unit `e_{ab}` (0-based indices).
    pub fn unit(space: &GradedSpace, a: usize, b: usize) -> Self {
        let mut m = Matrix::zeros(space.dim(), space.dim());
        m.set(a, b, Q::one());
        GradedOperator {
            domain: space.clone(),
            codomain: space.clone(),
            parity: space.parity(a) ^ space.parity(b),
            matrix: m,
        }
    }

    pub fn domain(&self) -> &GradedSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &GradedSpace {
        &self.codomain
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn scale(&self, c: &Q) -> Self {
        GradedOperator {
            matrix: self.matrix.scale(c),
            ..self.clone()
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedOperator) -> Result<Self, LinalgError> {
        if other.codomain != self.domain {
            return Err(LinalgError::DimensionMismatch {
                expected: (self.domain.dim(), 0),
                found: (other.codomain.dim(), 0),
            });
        }
        Ok(GradedOperator {
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            parity: self.parity ^ other.parity,
            matrix: &self.matrix * &other.matrix,
        })
    }

    pub fn add(&self, other: &GradedOperator) -> Result<Self, LinalgError> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(LinalgError::DimensionMismatch {
                expected: (self.codomain.dim(), self.domain.dim()),
                found: (other.codomain.dim(), other.domain.dim()),
            });
        }
        let matrix = &self.matrix + &other.matrix;
        if other.matrix.is_zero() {
            return Ok(self.clone());
        }
        if self.matrix.is_zero() {
            return Ok(other.clone());
        }
        if self.parity != other.parity {
            return Err(LinalgError::MixedParity);
        }
        Ok(GradedOperator { matrix, ..self.clone() })
    }

    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        self.matrix.apply(v)
    }
}

/// `(A ⊗ B)(u ⊗ v) = (-1)^{[B][u]} Au ⊗ Bv`.
pub fn graded_kron(a: &GradedOperator, b: &GradedOperator) -> GradedOperator {
    GradedOperator {
        domain: a.domain.tensor(&b.domain),
        codomain: a.codomain.tensor(&b.codomain),
        parity: a.parity ^ b.parity,
        matrix: graded_kron_matrix(&a.matrix, a.domain.parities(), &b.matrix, b.parity),
    }
}

pub fn supertranspose(a: &GradedOperator) -> Result<GradedOperator, LinalgError> {
    if a.domain != a.codomain {
        return Err(LinalgError::NotSquare);
    }
    Ok(GradedOperator {
        matrix: supertranspose_matrix(&a.matrix, a.domain.parities()),
        ..a.clone()
    })
}
