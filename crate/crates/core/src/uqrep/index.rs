use std::fmt;

use serde::{Deserialize, Serialize};

use super::RepError;
use crate::linalg::{GradedSpace, Parity};
use crate::scalars::Q;

/// Index data of gl(m|n). Indices are 0-based: `a < m` is even, `a >= m` odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SuperIndex {
    m: usize,
    n: usize,
}

impl SuperIndex {
    pub fn new(m: usize, n: usize) -> Result<Self, RepError> {
        if m == 0 || n == 0 {
            return Err(RepError::BadIndex { m, n });
        }
        Ok(SuperIndex { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `m + n`.
    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn parity(&self, a: usize) -> Parity {
        u8::from(a >= self.m)
    }

    /// Exponent `e` with `q_a = q^e`.
    pub fn q_exp(&self, a: usize) -> i64 {
        if self.parity(a) == 0 {
            1
        } else {
            -1
        }
    }

    pub fn q_a(&self, a: usize) -> Q {
        Q::q_pow(self.q_exp(a))
    }

    pub fn space(&self) -> GradedSpace {
        GradedSpace::gl(self.m, self.n)
    }

    /// All generators in fixed order: every `K_a, K_a^{-1}`, then `E_b, F_b` pairs.
    pub fn generators(&self) -> Vec<Generator> {
        let mut out = Vec::new();
        for a in 0..self.size() {
            out.push(Generator::K(a));
            out.push(Generator::Kinv(a));
        }
        for b in 0..self.size() - 1 {
            out.push(Generator::E(b));
            out.push(Generator::F(b));
        }
        out
    }

    pub fn raising(&self) -> Vec<Generator> {
        (0..self.size() - 1).map(Generator::E).collect()
    }

    pub fn lowering(&self) -> Vec<Generator> {
        (0..self.size() - 1).map(Generator::F).collect()
    }

    /// Unit weight `ε_a`.
    pub fn unit_weight(&self, a: usize) -> Weight {
        let mut w = vec![0; self.size()];
        w[a] = 1;
        Weight(w)
    }

    pub fn zero_weight(&self) -> Weight {
        Weight(vec![0; self.size()])
    }
}

impl fmt::Display for SuperIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gl({}|{})", self.m, self.n)
    }
}

/// Algebra generators. `E(b)` is `E_{b,b+1}` and `F(b)` is `E_{b+1,b}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    K(usize),
    Kinv(usize),
    E(usize),
    F(usize),
}

impl Generator {
    pub fn parity(&self, idx: &SuperIndex) -> Parity {
        match *self {
            Generator::E(b) | Generator::F(b) => u8::from(b + 1 == idx.m()),
            _ => 0,
        }
    }

    pub fn is_cartan(&self) -> bool {
        matches!(self, Generator::K(_) | Generator::Kinv(_))
    }

    pub fn inverse_cartan(&self) -> Option<Generator> {
        match *self {
            Generator::K(a) => Some(Generator::Kinv(a)),
            Generator::Kinv(a) => Some(Generator::K(a)),
            _ => None,
        }
    }

    /// Weight by which the generator shifts weight vectors.
    pub fn weight(&self, idx: &SuperIndex) -> Weight {
        let mut w = vec![0; idx.size()];
        match *self {
            Generator::E(b) => {
                w[b] = 1;
                w[b + 1] = -1;
            }
            Generator::F(b) => {
                w[b] = -1;
                w[b + 1] = 1;
            }
            _ => {}
        }
        Weight(w)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::K(a) => write!(f, "K{}", a + 1),
            Generator::Kinv(a) => write!(f, "K{}^-1", a + 1),
            Generator::E(b) => write!(f, "E{}{}", b + 1, b + 2),
            Generator::F(b) => write!(f, "E{}{}", b + 2, b + 1),
        }
    }
}

/// Integer weight vector, ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Parity of a weight vector in a tensor module: the sum of odd components.
    pub fn parity(&self, idx: &SuperIndex) -> Parity {
        let s: i64 = self.0[idx.m()..].iter().sum();
        (s.rem_euclid(2)) as u8
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A linear combination of generator words, read left to right as products.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UElement {
    pub terms: Vec<(Q, Vec<Generator>)>,
}

impl UElement {
    pub fn word(w: Vec<Generator>) -> Self {
        UElement {
            terms: vec![(Q::one(), w)],
        }
    }

    pub fn generator(g: Generator) -> Self {
        Self::word(vec![g])
    }

    pub fn signed_word(c: i64, w: Vec<Generator>) -> Self {
        UElement {
            terms: vec![(Q::from_int(c), w)],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parities_and_q_a() {
        let idx = SuperIndex::new(2, 1).unwrap();
        assert_eq!((0..3).map(|a| idx.parity(a)).collect::<Vec<_>>(), vec![0, 0, 1]);
        assert_eq!(idx.q_a(2), Q::q_pow(-1));
        assert_eq!(Generator::E(1).parity(&idx), 1);
        assert_eq!(Generator::E(0).parity(&idx), 0);
        assert!(SuperIndex::new(0, 1).is_err());
    }

    #[test]
    fn weight_order_is_lexicographic() {
        assert!(Weight(vec![1, 0]) > Weight(vec![0, 5]));
        assert!(Weight(vec![0, -1]) > Weight(vec![-1, 0]));
        assert_eq!(Weight(vec![2, -1]).to_string(), "(2,-1)");
    }
}
