use std::collections::BTreeMap;

use super::convention::{word_parity, Convention, CoproductTerm};
use super::index::{Generator, SuperIndex, UElement, Weight};
use super::RepError;
use crate::linalg::graded::{graded_kron_matrix, supertranspose_matrix};
use crate::linalg::{GradedSpace, Matrix, Parity};
use crate::scalars::Q;

/// A finite-dimensional module given by the matrices of all generators on a
/// weight basis (every `K_a` is diagonal).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepModule {
    idx: SuperIndex,
    space: GradedSpace,
    k: Vec<Matrix>,
    kinv: Vec<Matrix>,
    e: Vec<Matrix>,
    f: Vec<Matrix>,
    weights: Vec<Weight>,
    provenance: String,
}

fn read_weights(idx: &SuperIndex, k: &[Matrix]) -> Result<Vec<Weight>, RepError> {
    let dim = k.first().map_or(0, Matrix::rows);
    let mut out = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut w = Vec::with_capacity(idx.size());
        for (a, ka) in k.iter().enumerate() {
            let d = ka.get(i, i);
            let e = match d.as_signed_monomial() {
                Some((1, e)) => e,
                _ => return Err(RepError::NotWeightBasis),
            };
            w.push(e * idx.q_exp(a));
        }
        out.push(Weight(w));
    }
    for ka in k {
        if ka.nonzeros().any(|(i, j, _)| i != j) {
            return Err(RepError::NotWeightBasis);
        }
    }
    Ok(out)
}

impl RepModule {
    pub fn from_parts(
        idx: SuperIndex,
        space: GradedSpace,
        k: Vec<Matrix>,
        kinv: Vec<Matrix>,
        e: Vec<Matrix>,
        f: Vec<Matrix>,
        provenance: impl Into<String>,
    ) -> Result<Self, RepError> {
        let d = space.dim();
        let shapes_ok = k.len() == idx.size()
            && kinv.len() == idx.size()
            && e.len() + 1 == idx.size()
            && f.len() + 1 == idx.size()
            && k.iter().chain(&kinv).chain(&e).chain(&f).all(|m| m.rows() == d && m.cols() == d);
        if !shapes_ok {
            return Err(RepError::Shape);
        }
        let weights = read_weights(&idx, &k)?;
        Ok(RepModule {
            idx,
            space,
            k,
            kinv,
            e,
            f,
            weights,
            provenance: provenance.into(),
        })
    }

    /// Module whose Cartan part acts by the given weights and whose
    /// remaining generators are supplied by `ef(generator)`.
    pub fn from_weights(
        idx: SuperIndex,
        space: GradedSpace,
        weights: &[Weight],
        mut ef: impl FnMut(Generator) -> Matrix,
        provenance: impl Into<String>,
    ) -> Result<Self, RepError> {
        let n = idx.size();
        let k = (0..n)
            .map(|a| Matrix::diagonal(weights.iter().map(|w| Q::q_pow(w.0[a] * idx.q_exp(a))).collect()))
            .collect();
        let kinv = (0..n)
            .map(|a| Matrix::diagonal(weights.iter().map(|w| Q::q_pow(-w.0[a] * idx.q_exp(a))).collect()))
            .collect();
        let e = (0..n - 1).map(|b| ef(Generator::E(b))).collect();
        let f = (0..n - 1).map(|b| ef(Generator::F(b))).collect();
        Self::from_parts(idx, space, k, kinv, e, f, provenance)
    }

    /// The vector module: `E_{b,b+1}` and `E_{b+1,b}` are matrix units and
    /// `K_a v_a = q_a^o v_a` with `o` the convention's orientation.
    pub fn vector(idx: SuperIndex, conv: &Convention) -> Self {
        let n = idx.size();
        let o = i64::from(conv.orientation);
        let weights: Vec<Weight> = (0..n)
            .map(|a| {
                let mut w = idx.zero_weight();
                w.0[a] = o;
                w
            })
            .collect();
        Self::from_weights(
            idx,
            idx.space(),
            &weights,
            |g| {
                let mut m = Matrix::zeros(n, n);
                match g {
                    Generator::E(b) => m.set(b, b + 1, Q::one()),
                    Generator::F(b) => m.set(b + 1, b, Q::one()),
                    _ => unreachable!(),
                }
                m
            },
            "E",
        )
        .expect("vector module is well formed")
    }

    pub fn trivial(idx: SuperIndex) -> Self {
        Self::from_weights(
            idx,
            GradedSpace::new(vec![0]),
            &[idx.zero_weight()],
            |_| Matrix::zeros(1, 1),
            "1",
        )
        .expect("trivial module is well formed")
    }

    /// One-dimensional module of weight `w` on which every `E`, `F` acts by zero.
    pub fn weight_line(idx: SuperIndex, w: &Weight, parity: Parity) -> Result<Self, RepError> {
        if w.len() != idx.size() {
            return Err(RepError::Shape);
        }
        Self::from_weights(
            idx,
            GradedSpace::new(vec![parity]),
            std::slice::from_ref(w),
            |_| Matrix::zeros(1, 1),
            format!("line{w}"),
        )
    }

    /// Dual module: `g ↦ st(π(S g))`.
    pub fn dual(pi: &RepModule, conv: &Convention) -> Self {
        let par = pi.space.parities().to_vec();
        let img = |g: Generator| supertranspose_matrix(&pi.act_element(&conv.antipode(g)), &par);
        let n = pi.idx.size();
        let k = (0..n).map(|a| img(Generator::K(a))).collect();
        let kinv = (0..n).map(|a| img(Generator::Kinv(a))).collect();
        let e = (0..n - 1).map(|b| img(Generator::E(b))).collect();
        let f = (0..n - 1).map(|b| img(Generator::F(b))).collect();
        let name = if pi.provenance == "E" {
            "Ebar".to_string()
        } else {
            format!("dual({})", pi.provenance)
        };
        Self::from_parts(pi.idx, pi.space.clone(), k, kinv, e, f, name).expect("dual keeps a weight basis")
    }

    /// `A ⊗ B` through the coproduct.
    pub fn tensor(a: &RepModule, b: &RepModule, conv: &Convention) -> Self {
        assert_eq!(a.idx, b.idx);
        let idx = a.idx;
        let act = |g: Generator| tensor_action(a, b, &conv.coproduct(g));
        let n = idx.size();
        let k = (0..n).map(|x| act(Generator::K(x))).collect();
        let kinv = (0..n).map(|x| act(Generator::Kinv(x))).collect();
        let e = (0..n - 1).map(|x| act(Generator::E(x))).collect();
        let f = (0..n - 1).map(|x| act(Generator::F(x))).collect();
        let name = join_words(&a.provenance, &b.provenance);
        Self::from_parts(idx, a.space.tensor(&b.space), k, kinv, e, f, name).expect("tensor keeps a weight basis")
    }

    pub fn idx(&self) -> SuperIndex {
        self.idx
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    pub fn weight(&self, i: usize) -> &Weight {
        &self.weights[i]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn with_provenance(mut self, p: impl Into<String>) -> Self {
        self.provenance = p.into();
        self
    }

    /// Basis indices grouped by weight.
    pub fn weight_spaces(&self) -> BTreeMap<Weight, Vec<usize>> {
        let mut out: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for (i, w) in self.weights.iter().enumerate() {
            out.entry(w.clone()).or_default().push(i);
        }
        out
    }

    pub fn act(&self, g: Generator) -> &Matrix {
        match g {
            Generator::K(a) => &self.k[a],
            Generator::Kinv(a) => &self.kinv[a],
            Generator::E(b) => &self.e[b],
            Generator::F(b) => &self.f[b],
        }
    }

    pub fn act_word(&self, w: &[Generator]) -> Matrix {
        match w.split_first() {
            None => Matrix::identity(self.dim()),
            Some((g, rest)) => rest.iter().fold(self.act(*g).clone(), |acc, h| &acc * self.act(*h)),
        }
    }

    pub fn act_element(&self, u: &UElement) -> Matrix {
        let mut acc = Matrix::zeros(self.dim(), self.dim());
        for (c, w) in &u.terms {
            acc = &acc + &self.act_word(w).scale(c);
        }
        acc
    }

    /// Names of the defining relations that fail on this module.
    pub fn relation_failures(&self, serre: bool) -> Vec<String> {
        let idx = self.idx;
        let n = idx.size();
        let d = self.dim();
        let id = Matrix::identity(d);
        let mut bad = Vec::new();
        for a in 0..n {
            if &self.k[a] * &self.kinv[a] != id || &self.kinv[a] * &self.k[a] != id {
                bad.push(format!("K{0} K{0}^-1 = 1", a + 1));
            }
            for b in a + 1..n {
                if &self.k[a] * &self.k[b] != &self.k[b] * &self.k[a] {
                    bad.push(format!("K{} K{} = K{} K{}", a + 1, b + 1, b + 1, a + 1));
                }
            }
        }
        let gens: Vec<Generator> = idx.raising().into_iter().chain(idx.lowering()).collect();
        for a in 0..n {
            for &g in &gens {
                let w = g.weight(&idx);
                let lhs = &(&self.k[a] * self.act(g)) * &self.kinv[a];
                let rhs = self.act(g).scale(&Q::q_pow(idx.q_exp(a) * w.0[a]));
                if lhs != rhs {
                    bad.push(format!("K{} {} K{}^-1", a + 1, g, a + 1));
                }
            }
        }
        for b in 0..n - 1 {
            for c in 0..n - 1 {
                let (e, f) = (&self.e[b], &self.f[c]);
                let odd = Generator::E(b).parity(&idx) & Generator::F(c).parity(&idx) == 1;
                let ef = e * f;
                let fe = f * e;
                let lhs = if odd { &ef + &fe } else { &ef - &fe };
                let rhs = if b == c {
                    let kk = &self.k[b] * &self.kinv[b + 1];
                    let kki = &self.kinv[b] * &self.k[b + 1];
                    let qb = idx.q_a(b);
                    let denom = &qb - &qb.inv().unwrap();
                    (&kk - &kki).scale(&denom.inv().unwrap())
                } else {
                    Matrix::zeros(d, d)
                };
                if lhs != rhs {
                    bad.push(format!("[E{}{}, E{}{}}}", b + 1, b + 2, c + 2, c + 1));
                }
            }
        }
        for b in 0..n - 1 {
            if Generator::E(b).parity(&idx) == 1 {
                if !(&self.e[b] * &self.e[b]).is_zero() {
                    bad.push(format!("E{}{}^2 = 0", b + 1, b + 2));
                }
                if !(&self.f[b] * &self.f[b]).is_zero() {
                    bad.push(format!("E{}{}^2 = 0", b + 2, b + 1));
                }
            }
            for c in b + 2..n - 1 {
                for (x, y, nm) in [(&self.e, &self.e, "E"), (&self.f, &self.f, "F")] {
                    if &x[b] * &y[c] != &y[c] * &x[b] {
                        bad.push(format!("{nm}{} {nm}{} commute", b + 1, c + 1));
                    }
                }
            }
        }
        if serre {
            for b in 0..n - 1 {
                if Generator::E(b).parity(&idx) == 1 {
                    continue;
                }
                let qb = idx.q_a(b);
                let qsum = &qb + &qb.inv().unwrap();
                for c in [b.wrapping_sub(1), b + 1] {
                    if c >= n - 1 {
                        continue;
                    }
                    for (x, nm) in [(&self.e, "E"), (&self.f, "F")] {
                        let xb2 = &x[b] * &x[b];
                        let t1 = &xb2 * &x[c];
                        let t2 = &(&x[b] * &x[c]) * &x[b];
                        let t3 = &x[c] * &xb2;
                        let s = &(&t1 - &t2.scale(&qsum)) + &t3;
                        if !s.is_zero() {
                            bad.push(format!("Serre {nm}{} {nm}{}", b + 1, c + 1));
                        }
                    }
                }
            }
        }
        bad
    }

    /// Every generator with its matrix, in the fixed generator order.
    pub fn generator_matrices(&self) -> Vec<(Generator, &Matrix)> {
        self.idx.generators().into_iter().map(|g| (g, self.act(g))).collect()
    }
}

/// Action of a sum of tensor terms on `A ⊗ B`.
pub fn tensor_action(a: &RepModule, b: &RepModule, terms: &[CoproductTerm]) -> Matrix {
    let idx = a.idx;
    let mut acc = Matrix::zeros(a.dim() * b.dim(), a.dim() * b.dim());
    for (c, x, y) in terms {
        let m = graded_kron_matrix(&a.act_word(x), a.space.parities(), &b.act_word(y), word_parity(y, &idx));
        acc = &acc + &m.scale(c);
    }
    acc
}

fn join_words(a: &str, b: &str) -> String {
    match (a, b) {
        ("1", _) => b.to_string(),
        (_, "1") => a.to_string(),
        _ => format!("{a}*{b}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uqrep::convention::Side;

    fn conv() -> Convention {
        Convention {
            raising: Side::Right,
            lowering: Side::Left,
            orientation: 1,
        }
    }

    #[test]
    fn vector_module_entries() {
        let idx = SuperIndex::new(1, 1).unwrap();
        let e = RepModule::vector(idx, &conv());
        assert_eq!(e.act(Generator::K(0)).get(0, 0), &Q::q());
        assert_eq!(e.act(Generator::K(1)).get(1, 1), &Q::q_pow(-1));
        assert_eq!(e.act(Generator::E(0)).get(0, 1), &Q::one());
        assert_eq!(e.act(Generator::F(0)).get(1, 0), &Q::one());
        assert_eq!(e.act(Generator::E(0)).nonzeros().count(), 1);
        assert_eq!(e.weight(0), &Weight(vec![1, 0]));
        assert!(e.relation_failures(true).is_empty());
    }

    #[test]
    fn dual_weights_are_negated() {
        let idx = SuperIndex::new(1, 1).unwrap();
        let e = RepModule::vector(idx, &conv());
        let d = RepModule::dual(&e, &conv());
        assert_eq!(d.weights(), &[Weight(vec![-1, 0]), Weight(vec![0, -1])]);
        assert!(d.relation_failures(true).is_empty());
    }

    #[test]
    fn tensor_weights_add() {
        let idx = SuperIndex::new(1, 1).unwrap();
        let e = RepModule::vector(idx, &conv());
        let t = RepModule::tensor(&e, &e, &conv());
        let mut ws = t.weights().to_vec();
        ws.sort();
        assert_eq!(ws, vec![Weight(vec![0, 2]), Weight(vec![1, 1]), Weight(vec![1, 1]), Weight(vec![2, 0])]);
        assert!(t.relation_failures(true).is_empty());
        assert_eq!(t.provenance(), "E*E");
    }
}
