//! Parabolic data: the Levi generators `S_k` and the parabolic sets `S_p±`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::HomError;
use crate::uqrep::decompose::{generate, singular_vectors, submodule};
use crate::uqrep::{cache, hom_dim, Generator, RepModule, SuperIndex, TensorWord, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ParabolicSign {
    Plus,
    Minus,
}

impl fmt::Display for ParabolicSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParabolicSign::Plus => "p+",
            ParabolicSign::Minus => "p-",
        })
    }
}

/// Which subalgebra a module is restricted to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Subalgebra {
    Levi,
    Parabolic(ParabolicSign),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParabolicSpec {
    idx: SuperIndex,
    /// Simple root indices, 1-based as in `{1, …, m+n−1}`.
    theta: BTreeSet<usize>,
}

impl ParabolicSpec {
    pub fn new(idx: SuperIndex, theta: impl IntoIterator<Item = usize>) -> Result<Self, HomError> {
        let theta: BTreeSet<usize> = theta.into_iter().collect();
        let max = idx.size() - 1;
        if let Some(&c) = theta.iter().find(|&&c| c == 0 || c > max) {
            return Err(HomError::BadTheta { root: c, max });
        }
        Ok(ParabolicSpec { idx, theta })
    }

    /// `Θ = I'`, so that the Levi part is everything.
    pub fn full(idx: SuperIndex) -> Self {
        ParabolicSpec {
            idx,
            theta: (1..idx.size()).collect(),
        }
    }

    pub fn idx(&self) -> SuperIndex {
        self.idx
    }

    pub fn theta(&self) -> &BTreeSet<usize> {
        &self.theta
    }

    fn in_theta(&self, b: usize) -> bool {
        self.theta.contains(&(b + 1))
    }

    /// `S_k`: all Cartan generators and `E_{c,c+1}`, `E_{c+1,c}` for `c ∈ Θ`.
    pub fn s_k(&self) -> Vec<Generator> {
        self.idx
            .generators()
            .into_iter()
            .filter(|g| match *g {
                Generator::E(b) | Generator::F(b) => self.in_theta(b),
                _ => true,
            })
            .collect()
    }

    /// `S_p±`: `S_k` plus the raising (resp. lowering) generators outside `Θ`.
    pub fn s_p(&self, sign: ParabolicSign) -> Vec<Generator> {
        self.idx
            .generators()
            .into_iter()
            .filter(|g| match (*g, sign) {
                (Generator::E(_), ParabolicSign::Plus) | (Generator::F(_), ParabolicSign::Minus) => true,
                (Generator::E(b), _) | (Generator::F(b), _) => self.in_theta(b),
                _ => true,
            })
            .collect()
    }

    pub fn generators(&self, which: Subalgebra) -> Vec<Generator> {
        match which {
            Subalgebra::Levi => self.s_k(),
            Subalgebra::Parabolic(s) => self.s_p(s),
        }
    }

    /// Same space; generators outside the chosen set act by zero.
    pub fn restrict(&self, m: &RepModule, which: Subalgebra) -> RepModule {
        let keep = self.generators(which);
        let n = self.idx.size();
        let pick = |g: Generator| {
            if keep.contains(&g) {
                m.act(g).clone()
            } else {
                crate::linalg::Matrix::zeros(m.dim(), m.dim())
            }
        };
        RepModule::from_parts(
            self.idx,
            m.space().clone(),
            (0..n).map(|a| m.act(Generator::K(a)).clone()).collect(),
            (0..n).map(|a| m.act(Generator::Kinv(a)).clone()).collect(),
            (0..n - 1).map(|b| pick(Generator::E(b))).collect(),
            (0..n - 1).map(|b| pick(Generator::F(b))).collect(),
            format!("{}|k", m.provenance()),
        )
        .expect("restriction keeps the Cartan part")
    }

    fn theta_raising(&self) -> Vec<Generator> {
        self.s_k().into_iter().filter(|g| matches!(g, Generator::E(_))).collect()
    }

    fn theta_lowering(&self) -> Vec<Generator> {
        self.s_k().into_iter().filter(|g| matches!(g, Generator::F(_))).collect()
    }

    /// Is `v` irreducible as a module over the Levi part?
    pub fn is_k_irreducible(&self, v: &RepModule) -> bool {
        singular_vectors(v, &self.theta_raising()).len() == 1 && hom_dim(v, v, &self.s_k()) == 1
    }

    /// Lowest weight of a Levi-irreducible module.
    pub fn k_lowest_weight(&self, v: &RepModule) -> Result<Weight, HomError> {
        let low = singular_vectors(v, &self.theta_lowering());
        match low.as_slice() {
            [(w, _)] => Ok(w.clone()),
            _ => Err(HomError::NotKIrreducible),
        }
    }

    /// The Levi submodule of `m` generated by a Levi-singular vector of
    /// weight `mu`, if one generates an irreducible submodule.
    pub fn k_summand(&self, m: &RepModule, mu: &Weight) -> Result<Option<RepModule>, HomError> {
        let mk = self.restrict(m, Subalgebra::Levi);
        for (w, v) in singular_vectors(&mk, &self.theta_raising()) {
            if &w != mu {
                continue;
            }
            let g = generate(&mk, &[v]);
            let sub = submodule(&mk, &g, format!("{}|k[hw={mu}]", m.provenance()));
            if self.is_k_irreducible(&sub) {
                return Ok(Some(sub));
            }
        }
        Ok(None)
    }

    /// Whether the weight line of `w` is a Levi module: `w` must pair to zero
    /// with every simple coroot in `Θ`.
    pub fn admits_line(&self, w: &Weight) -> bool {
        let m = self.idx.m();
        self.theta.iter().all(|&i| {
            let (a, b) = (w.0[i - 1], w.0[i]);
            if i == m {
                a + b == 0
            } else {
                a == b
            }
        })
    }

    /// The Levi irrep of highest weight `mu`, inflated to the parabolic
    /// algebras with the nilradical acting by zero. For `Θ = ∅` this is the
    /// weight line; otherwise it is cut out of a small mixed tensor word.
    pub fn k_irrep(&self, mu: &Weight) -> Result<RepModule, HomError> {
        if mu.len() != self.idx.size() {
            return Err(HomError::Rep(crate::uqrep::RepError::Shape));
        }
        if self.theta.is_empty() {
            return Ok(RepModule::weight_line(self.idx, mu, mu.parity(&self.idx))?);
        }
        let t = mu.total();
        let base = t.unsigned_abs() as usize;
        for extra in 0..=2usize {
            let (k, l) = if t >= 0 { (base + extra, extra) } else { (extra, base + extra) };
            let m = cache::module(self.idx, &TensorWord::block(k, l))?;
            if let Some(v) = self.k_summand(&m, mu)? {
                return Ok(v);
            }
        }
        Err(HomError::NoKIrrep(mu.clone()))
    }
}

impl fmt::Display for ParabolicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.theta.iter().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}
