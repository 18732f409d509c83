//! Elements of the coordinate superalgebra as combinations of matrix coefficients.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::registry::{module_of, ModuleKey};
use super::CoordError;
use crate::linalg::Parity;
use crate::scalars::Q;
use crate::uqrep::{Generator, SuperIndex, TensorWord};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixCoefficient {
    pub module: ModuleKey,
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for MatrixCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MC({},{},{})", self.module, self.row, self.col)
    }
}

/// A finite combination of matrix coefficients with nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GqElement {
    idx: SuperIndex,
    terms: BTreeMap<MatrixCoefficient, Q>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TermDump {
    pub module_word: String,
    pub irrep_tag: Option<String>,
    pub row: usize,
    pub col: usize,
    pub coeff: String,
}

impl GqElement {
    pub fn zero(idx: SuperIndex) -> Self {
        GqElement {
            idx,
            terms: BTreeMap::new(),
        }
    }

    pub fn mc(idx: SuperIndex, module: ModuleKey, row: usize, col: usize) -> Self {
        let mut f = Self::zero(idx);
        f.add_term(MatrixCoefficient { module, row, col }, Q::one());
        f
    }

    /// The unit, `MC(trivial, 0, 0)`.
    pub fn unit(idx: SuperIndex) -> Self {
        Self::mc(idx, ModuleKey::Word(TensorWord::trivial()), 0, 0)
    }

    /// `t_{ab}` with 0-based indices.
    pub fn t(idx: SuperIndex, a: usize, b: usize) -> Self {
        Self::mc(idx, ModuleKey::Word("E".parse().unwrap()), a, b)
    }

    /// `t̄_{ab}` with 0-based indices.
    pub fn tbar(idx: SuperIndex, a: usize, b: usize) -> Self {
        Self::mc(idx, ModuleKey::Word("Ebar".parse().unwrap()), a, b)
    }

    pub fn idx(&self) -> SuperIndex {
        self.idx
    }

    pub fn terms(&self) -> &BTreeMap<MatrixCoefficient, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mc: MatrixCoefficient, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mc.clone()).or_insert_with(Q::zero);
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&mc);
        }
    }

    pub fn add(&self, other: &GqElement) -> GqElement {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &GqElement) -> GqElement {
        self.add(&other.scale(&Q::from_int(-1)))
    }

    pub fn scale(&self, c: &Q) -> GqElement {
        if c.is_zero() {
            return Self::zero(self.idx);
        }
        GqElement {
            idx: self.idx,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Parity if homogeneous; the zero element is even.
    pub fn parity(&self) -> Result<Option<Parity>, CoordError> {
        let mut p = None;
        for mc in self.terms.keys() {
            let m = module_of(self.idx, &mc.module)?;
            let x = m.parity(mc.row) ^ m.parity(mc.col);
            match p {
                None => p = Some(x),
                Some(y) if y != x => return Ok(None),
                _ => {}
            }
        }
        Ok(Some(p.unwrap_or(0)))
    }

    /// `⟨f, w⟩`: the `(row, col)` entries of the word's action, summed.
    pub fn pair(&self, w: &[Generator]) -> Result<Q, CoordError> {
        let mut acc = Q::zero();
        for (mc, c) in &self.terms {
            let m = module_of(self.idx, &mc.module)?;
            let a = m.act_word(w);
            acc += &(a.get(mc.row, mc.col) * c);
        }
        Ok(acc)
    }

    /// Deterministic element dump.
    pub fn dump(&self) -> Vec<TermDump> {
        self.terms
            .iter()
            .map(|(mc, c)| {
                let (module_word, irrep_tag) = match &mc.module {
                    ModuleKey::Word(w) => (w.to_string(), None),
                    ModuleKey::Irrep(hw) => (
                        super::registry::irrep(self.idx, hw)
                            .map(|r| r.parent.to_string())
                            .unwrap_or_default(),
                        Some(format!("W{hw}")),
                    ),
                };
                TermDump {
                    module_word,
                    irrep_tag,
                    row: mc.row,
                    col: mc.col,
                    coeff: c.to_string(),
                }
            })
            .collect()
    }
}

impl fmt::Display for GqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mc, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}*{mc}")?;
        }
        Ok(())
    }
}
