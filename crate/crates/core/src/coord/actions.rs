//! The right action `R` and left action `L` of the enveloping algebra on
//! matrix coefficients.

use super::element::{GqElement, MatrixCoefficient};
use super::registry::module_of;
use super::signs::{self, CoproductSign};
use super::CoordError;
use crate::linalg::{Matrix, Parity};
use crate::scalars::Q;
use crate::uqrep::convention::{self, antipode_inverse_word, word_parity};
use crate::uqrep::{Generator, RepModule};

/// `R_x MC(i,j) = Σ_k (-1)^{[x]([f]+[x])} s(i,k,j) ⟨MC(k,j), x⟩ MC(i,k)`
/// where `mx` is the action of `x` and `px` its parity.
pub fn r_terms(m: &RepModule, px: Parity, mx: &Matrix, sign: CoproductSign, i: usize, j: usize) -> Vec<(usize, Q)> {
    let pf = m.parity(i) ^ m.parity(j);
    let outer = px & (pf ^ px) == 1;
    (0..m.dim())
        .filter_map(|k| {
            let x = mx.get(k, j);
            if x.is_zero() {
                return None;
            }
            let flip = outer ^ sign.flips(m.parity(i), m.parity(k), m.parity(j));
            Some((k, if flip { -x } else { x.clone() }))
        })
        .collect()
}

/// `L_x MC(i,j) = Σ_k s(i,k,j) ⟨MC(i,k), S^{-1}x⟩ MC(k,j)` where `ms` is
/// the action of `S^{-1}(x)`.
pub fn l_terms(m: &RepModule, ms: &Matrix, sign: CoproductSign, i: usize, j: usize) -> Vec<(usize, Q)> {
    (0..m.dim())
        .filter_map(|k| {
            let x = ms.get(i, k);
            if x.is_zero() {
                return None;
            }
            let flip = sign.flips(m.parity(i), m.parity(k), m.parity(j));
            Some((k, if flip { -x } else { x.clone() }))
        })
        .collect()
}

/// Action of `S^{-1}(x)` on a module under the published convention.
pub fn antipode_inverse_matrix(m: &RepModule, x: &[Generator]) -> Result<Matrix, CoordError> {
    let conv = convention::global()?;
    Ok(m.act_element(&antipode_inverse_word(&conv, x, &m.idx())))
}

pub fn act_r(x: &[Generator], f: &GqElement) -> Result<GqElement, CoordError> {
    let sign = signs::ensure()?.coproduct;
    let idx = f.idx();
    let px = word_parity(x, &idx);
    let mut out = GqElement::zero(idx);
    for (mc, c) in f.terms() {
        let m = module_of(idx, &mc.module)?;
        let mx = m.act_word(x);
        for (k, y) in r_terms(&m, px, &mx, sign, mc.row, mc.col) {
            let key = MatrixCoefficient {
                module: mc.module.clone(),
                row: mc.row,
                col: k,
            };
            out.add_term(key, &y * c);
        }
    }
    Ok(out)
}

pub fn act_l(x: &[Generator], f: &GqElement) -> Result<GqElement, CoordError> {
    let sign = signs::ensure()?.coproduct;
    let idx = f.idx();
    let mut out = GqElement::zero(idx);
    for (mc, c) in f.terms() {
        let m = module_of(idx, &mc.module)?;
        let ms = antipode_inverse_matrix(&m, x)?;
        for (k, y) in l_terms(&m, &ms, sign, mc.row, mc.col) {
            let key = MatrixCoefficient {
                module: mc.module.clone(),
                row: k,
                col: mc.col,
            };
            out.add_term(key, &y * c);
        }
    }
    Ok(out)
}
