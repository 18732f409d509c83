//! Sign placement for products and coproducts of matrix coefficients.
//!
//! Both are selected from small candidate lists by requiring the pairing
//! with the enveloping algebra to be a bialgebra pairing.

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use super::element::GqElement;
use super::CoordError;
use crate::linalg::Parity;
use crate::rmatrix;
use crate::scalars::Q;
use crate::uqrep::convention::{coproduct_word, word_parity};
use crate::uqrep::{cache, Generator, SuperIndex, TensorWord};

/// Exponent of the sign in `MC(W,i,j)·MC(W',k,l) = ± MC(W⊗W',(i,k),(j,l))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ProductSign {
    Plain,
    /// `[g][i]`
    RightByLeftRow,
    /// `[g][j]`
    RightByLeftCol,
    /// `[f][k]`
    LeftByRightRow,
}

pub const PRODUCT_CANDIDATES: [ProductSign; 4] = [
    ProductSign::Plain,
    ProductSign::RightByLeftRow,
    ProductSign::RightByLeftCol,
    ProductSign::LeftByRightRow,
];

impl ProductSign {
    /// `true` when the product of `(i,j)` and `(k,l)` coefficients flips sign.
    pub fn flips(self, pi: Parity, pj: Parity, pk: Parity, pl: Parity) -> bool {
        let (f, g) = (pi ^ pj, pk ^ pl);
        match self {
            ProductSign::Plain => false,
            ProductSign::RightByLeftRow => g & pi == 1,
            ProductSign::RightByLeftCol => g & pj == 1,
            ProductSign::LeftByRightRow => f & pk == 1,
        }
    }
}

/// Sign in `Δ MC(i,j) = Σ_k ± MC(i,k) ⊗ MC(k,j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CoproductSign {
    Plain,
    /// `([i]+[k])([k]+[j])`
    Koszul,
}

pub const COPRODUCT_CANDIDATES: [CoproductSign; 2] = [CoproductSign::Plain, CoproductSign::Koszul];

impl CoproductSign {
    pub fn flips(self, pi: Parity, pk: Parity, pj: Parity) -> bool {
        match self {
            CoproductSign::Plain => false,
            CoproductSign::Koszul => (pi ^ pk) & (pk ^ pj) == 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CoordConvention {
    pub product: ProductSign,
    pub coproduct: CoproductSign,
}

impl fmt::Display for CoordConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "product={:?} coproduct={:?}", self.product, self.coproduct)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SignTrial {
    pub label: String,
    pub failures: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoordCalibration {
    pub product_trials: Vec<SignTrial>,
    pub coproduct_trials: Vec<SignTrial>,
    pub chosen: Option<CoordConvention>,
}

/// All words of length `≤ len` over the given letters, shortest first.
pub fn words_up_to(gens: &[Generator], len: usize) -> Vec<Vec<Generator>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for &g in gens {
                let mut x: Vec<Generator> = w.clone();
                x.push(g);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// The coordinate generators `t_{ab}` and `t̄_{ab}`.
pub fn generators(idx: SuperIndex) -> Vec<GqElement> {
    let n = idx.size();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            out.push(GqElement::t(idx, a, b));
        }
    }
    for a in 0..n {
        for b in 0..n {
            out.push(GqElement::tbar(idx, a, b));
        }
    }
    out
}

/// Failures of `⟨fg, w⟩ = Σ (-1)^{[g][w₁]} ⟨f, w₁⟩⟨g, w₂⟩` for the given sign.
pub fn product_failures(
    idx: SuperIndex,
    sign: ProductSign,
    elems: &[GqElement],
    words: &[Vec<Generator>],
) -> Result<usize, CoordError> {
    let conv = crate::uqrep::convention::global()?;
    let mut failures = 0;
    for f in elems {
        for g in elems {
            let fg = super::peter_weyl::multiply_raw(f, g, sign)?;
            let pg = g.parity()?.unwrap_or(0);
            for w in words {
                let lhs = fg.pair(w)?;
                let mut rhs = Q::zero();
                for (c, w1, w2) in coproduct_word(&conv, w, &idx) {
                    let a = f.pair(&w1)?;
                    if a.is_zero() {
                        continue;
                    }
                    let mut term = &(&c * &a) * &g.pair(&w2)?;
                    if pg & word_parity(&w1, &idx) == 1 {
                        term = -term;
                    }
                    rhs += &term;
                }
                if lhs != rhs {
                    failures += 1;
                }
            }
        }
    }
    Ok(failures)
}

/// Failures of `⟨Δf, x⊗y⟩ = ⟨f, xy⟩`, pairing tensors with
/// `⟨f₁⊗f₂, x⊗y⟩ = (-1)^{[f₂][x]} ⟨f₁,x⟩⟨f₂,y⟩`.
pub fn coproduct_failures(idx: SuperIndex, sign: CoproductSign, words: &[Vec<Generator>]) -> Result<usize, CoordError> {
    let mut failures = 0;
    for word in [TensorWord::block(1, 0), TensorWord::block(0, 1)] {
        let m = cache::module(idx, &word)?;
        let d = m.dim();
        for x in words {
            let ax = m.act_word(x);
            for y in words {
                let ay = m.act_word(y);
                let mut xy = x.clone();
                xy.extend(y.iter().copied());
                let axy = m.act_word(&xy);
                let px = word_parity(x, &idx);
                for i in 0..d {
                    for j in 0..d {
                        let mut rhs = Q::zero();
                        for k in 0..d {
                            let mut term = ax.get(i, k) * ay.get(k, j);
                            if term.is_zero() {
                                continue;
                            }
                            let flip = sign.flips(m.parity(i), m.parity(k), m.parity(j))
                                ^ ((m.parity(k) ^ m.parity(j)) & px == 1);
                            if flip {
                                term = -term;
                            }
                            rhs += &term;
                        }
                        if &rhs != axy.get(i, j) {
                            failures += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(failures)
}

/// Run both calibrations on gl(1|1).
pub fn calibrate() -> Result<CoordCalibration, CoordError> {
    rmatrix::ensure_calibrated()?;
    let idx = SuperIndex::new(1, 1)?;
    let gens = idx.generators();
    let short = words_up_to(&gens, 1);
    let words = words_up_to(&gens, 2);
    let elems = generators(idx);
    let mut product_trials = Vec::new();
    let mut product_pass = Vec::new();
    for s in PRODUCT_CANDIDATES {
        let failures = product_failures(idx, s, &elems, &words)?;
        if failures == 0 {
            product_pass.push(s);
        }
        product_trials.push(SignTrial {
            label: format!("{s:?}"),
            failures,
        });
    }
    let mut coproduct_trials = Vec::new();
    let mut coproduct_pass = Vec::new();
    for s in COPRODUCT_CANDIDATES {
        let failures = coproduct_failures(idx, s, &short)?;
        if failures == 0 {
            coproduct_pass.push(s);
        }
        coproduct_trials.push(SignTrial {
            label: format!("{s:?}"),
            failures,
        });
    }
    let chosen = match (product_pass.as_slice(), coproduct_pass.as_slice()) {
        ([p], [c]) => Some(CoordConvention {
            product: *p,
            coproduct: *c,
        }),
        _ => None,
    };
    Ok(CoordCalibration {
        product_trials,
        coproduct_trials,
        chosen,
    })
}

/// The calibrated sign convention, computed once.
pub fn ensure() -> Result<CoordConvention, CoordError> {
    static DONE: OnceLock<Result<CoordConvention, CoordError>> = OnceLock::new();
    DONE.get_or_init(|| {
        let report = calibrate()?;
        report.chosen.ok_or_else(|| {
            CoordError::SignCalibration(
                report
                    .product_trials
                    .iter()
                    .chain(&report.coproduct_trials)
                    .map(|t| format!("{}: {}", t.label, t.failures))
                    .collect::<Vec<_>>()
                    .join(", "),
            )
        })
    })
    .clone()
}
