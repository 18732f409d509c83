//! Solution spaces of the induced-module condition
//! `R_y(ζ) = (S(y) ⊗ id) ζ` inside `V ⊗ (span of matrix coefficients)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::Serialize;

use super::HomError;
use crate::coord::actions::{l_terms, r_terms};
use crate::coord::frame::{Frame, SlotKey};
use crate::coord::signs::{self, CoproductSign};
use crate::coord::{GqElement, MatrixCoefficient, ModuleKey};
use crate::linalg::elim::kernel_sparse;
use crate::linalg::{GradedSpace, Matrix, Parity, Span, SparseVec};
use crate::scalars::Q;
use crate::uqrep::convention::{self, antipode_inverse_word, Convention};
use crate::uqrep::{cache, Generator, RepModule, SuperIndex, TensorWord, Weight};

/// `Σ c · v_s ⊗ MC(M_t, row, col)` as `(s, t, row, col, c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub terms: Vec<(usize, usize, usize, usize, Q)>,
}

impl Section {
    /// The `G_q` component along `v_s`, on the given word modules.
    pub fn component(&self, s: usize, words: &[TensorWord], idx: SuperIndex) -> GqElement {
        let mut f = GqElement::zero(idx);
        for (s2, t, r, c, x) in &self.terms {
            if *s2 == s {
                let mc = MatrixCoefficient {
                    module: ModuleKey::Word(words[*t].clone()),
                    row: *r,
                    col: *c,
                };
                f.add_term(mc, x.clone());
            }
        }
        f
    }
}

/// Workspace tying a module `V` to a frame over tensor word modules.
pub struct InducedContext {
    idx: SuperIndex,
    pub v: RepModule,
    pub words: Vec<TensorWord>,
    pub frame: Frame,
    sign: CoproductSign,
    conv: Convention,
    sinv: HashMap<(usize, Generator), Matrix>,
    /// Independent matrix coefficients spanning each slot.
    slot_basis: BTreeMap<SlotKey, Vec<(usize, usize, usize)>>,
}

type CoordKey = (usize, SlotKey, usize);

impl InducedContext {
    pub fn new(v: &RepModule, words: &[TensorWord]) -> Result<Self, HomError> {
        let idx = v.idx();
        let conv = convention::global()?;
        let sign = signs::ensure()?.coproduct;
        let modules: Vec<Arc<RepModule>> = words
            .iter()
            .map(|w| cache::module(idx, w))
            .collect::<Result<_, _>>()?;
        let frame = Frame::new(modules.clone());
        let mut sinv = HashMap::new();
        for (t, m) in modules.iter().enumerate() {
            for g in idx.generators() {
                sinv.insert((t, g), m.act_element(&antipode_inverse_word(&conv, &[g], &idx)));
            }
        }
        let mut slot_basis: BTreeMap<SlotKey, Vec<(usize, usize, usize)>> = BTreeMap::new();
        let mut spans: BTreeMap<SlotKey, Span> = BTreeMap::new();
        for (t, m) in modules.iter().enumerate() {
            let ws = m.weight_spaces();
            for (nu, rows) in &ws {
                for (mu, cols) in &ws {
                    let key = (nu.clone(), mu.clone());
                    for &r in rows {
                        for &c in cols {
                            let span = spans.entry(key.clone()).or_default();
                            if span.insert(&frame.coords(t, r, c)).is_some() {
                                slot_basis.entry(key.clone()).or_default().push((t, r, c));
                            }
                        }
                    }
                }
            }
        }
        Ok(InducedContext {
            idx,
            v: v.clone(),
            words: words.to_vec(),
            frame,
            sign,
            conv,
            sinv,
            slot_basis,
        })
    }

    pub fn idx(&self) -> SuperIndex {
        self.idx
    }

    fn module(&self, t: usize) -> &RepModule {
        &self.frame.modules()[t]
    }

    fn term_parity(&self, s: usize, t: usize, r: usize, c: usize) -> Parity {
        let m = self.module(t);
        self.v.parity(s) ^ m.parity(r) ^ m.parity(c)
    }

    /// Coordinates of a section, keyed by `(s, slot, coordinate)`.
    pub fn coords(&self, sec: &Section) -> BTreeMap<CoordKey, Q> {
        let mut out: BTreeMap<CoordKey, Q> = BTreeMap::new();
        for (s, t, r, c, x) in &sec.terms {
            let slot = self.frame.slot_of(*t, *r, *c);
            for (i, y) in self.frame.coords(*t, *r, *c) {
                let e = out.entry((*s, slot.clone(), i)).or_insert_with(Q::zero);
                *e += &(&y * x);
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// `R_y(ζ) − (S(y) ⊗ id) ζ`, with `R` extended by the Koszul sign.
    pub fn eq3_image(&self, sec: &Section, y: Generator) -> Section {
        let py = y.parity(&self.idx);
        let sy = self.v.act_element(&self.conv.antipode(y));
        let mut terms = Vec::new();
        for (s, t, r, c, x) in &sec.terms {
            let m = self.module(*t);
            let flip = py & self.v.parity(*s) == 1;
            for (k, a) in r_terms(m, py, m.act(y), self.sign, *r, *c) {
                let v = &a * x;
                terms.push((*s, *t, *r, k, if flip { -v } else { v }));
            }
            for s2 in 0..self.v.dim() {
                let a = sy.get(s2, *s);
                if !a.is_zero() {
                    terms.push((s2, *t, *r, *c, -(a * x)));
                }
            }
        }
        Section { terms }
    }

    /// `L_x(ζ)`, extended to `V ⊗ G_q` by the Koszul sign.
    pub fn l_image(&self, sec: &Section, x: Generator) -> Section {
        let px = x.parity(&self.idx);
        let mut terms = Vec::new();
        for (s, t, r, c, a) in &sec.terms {
            let m = self.module(*t);
            let flip = px & self.v.parity(*s) == 1;
            for (k, b) in l_terms(m, &self.sinv[&(*t, x)], self.sign, *r, *c) {
                let v = &b * a;
                terms.push((*s, *t, k, *c, if flip { -v } else { v }));
            }
        }
        Section { terms }
    }

    /// Does `ζ` satisfy the condition for `y`?
    pub fn satisfies(&self, sec: &Section, y: Generator) -> bool {
        self.coords(&self.eq3_image(sec, y)).is_empty()
    }

    /// Basis of the sections satisfying the condition for every generator in
    /// `conditions`. Cartan generators are imposed by only admitting
    /// coefficients whose column weight is `−wt(v_s)`.
    pub fn solve(&self, conditions: &[Generator]) -> Vec<Section> {
        let ys: Vec<Generator> = conditions.iter().copied().filter(|g| !g.is_cartan()).collect();
        // Unknowns grouped by row weight and total parity; the system is block diagonal.
        let mut groups: BTreeMap<(Weight, Parity), Vec<(usize, usize, usize, usize)>> = BTreeMap::new();
        for s in 0..self.v.dim() {
            let mu = self.v.weight(s).neg();
            for ((nu, col_w), basis) in &self.slot_basis {
                if col_w != &mu {
                    continue;
                }
                for &(t, r, c) in basis {
                    let p = self.term_parity(s, t, r, c);
                    groups.entry((nu.clone(), p)).or_default().push((s, t, r, c));
                }
            }
        }
        let mut out = Vec::new();
        for unknowns in groups.values() {
            let mut eq_index: HashMap<(usize, CoordKey), usize> = HashMap::new();
            let mut rows: Vec<SparseVec> = Vec::new();
            for (u, &(s, t, r, c)) in unknowns.iter().enumerate() {
                let unit = Section {
                    terms: vec![(s, t, r, c, Q::one())],
                };
                for (yi, &y) in ys.iter().enumerate() {
                    for (key, x) in self.coords(&self.eq3_image(&unit, y)) {
                        let next = eq_index.len();
                        let e = *eq_index.entry((yi, key)).or_insert(next);
                        if e == rows.len() {
                            rows.push(Vec::new());
                        }
                        rows[e].push((u, x));
                    }
                }
            }
            for k in kernel_sparse(&rows, unknowns.len()) {
                let terms = k
                    .into_iter()
                    .map(|(u, x)| {
                        let (s, t, r, c) = unknowns[u];
                        (s, t, r, c, x)
                    })
                    .collect();
                out.push(Section { terms });
            }
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockDim {
    pub k: usize,
    pub l: usize,
    pub dim: usize,
}

/// A solved induced space with its left module structure.
pub struct InducedSpace {
    pub context: InducedContext,
    pub basis: Vec<Section>,
    /// `None` when `L` does not preserve the solution space.
    pub module: Option<RepModule>,
    /// Every basis vector satisfies the condition for every generator checked.
    pub conditions_hold: bool,
}

impl InducedSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn l_stable(&self) -> bool {
        self.module.is_some()
    }
}

fn flatten(index: &mut HashMap<CoordKey, usize>, coords: BTreeMap<CoordKey, Q>) -> SparseVec {
    let mut v: SparseVec = coords
        .into_iter()
        .map(|(k, x)| {
            let next = index.len();
            (*index.entry(k).or_insert(next), x)
        })
        .collect();
    v.sort_by_key(|(i, _)| *i);
    v
}

/// Solve, verify every condition (Cartan included) on the basis, and build
/// the `L`-module on the solution space.
pub fn induce(v: &RepModule, conditions: &[Generator], words: &[TensorWord]) -> Result<InducedSpace, HomError> {
    let context = InducedContext::new(v, words)?;
    let basis = context.solve(conditions);
    let conditions_hold = basis.iter().all(|b| conditions.iter().all(|&y| context.satisfies(b, y)));
    let idx = context.idx();
    let mut index = HashMap::new();
    let mut span = Span::new();
    for b in &basis {
        let c = flatten(&mut index, context.coords(b));
        span.insert(&c).expect("kernel basis is independent");
    }
    let d = basis.len();
    let mut mats: BTreeMap<Generator, Matrix> = BTreeMap::new();
    let mut stable = true;
    'gens: for g in idx.generators() {
        let mut a = Matrix::zeros(d, d);
        for (i, b) in basis.iter().enumerate() {
            let img = flatten(&mut index, context.coords(&context.l_image(b, g)));
            match span.coords(&img) {
                Some(col) => {
                    for (j, x) in col {
                        a.set(j, i, x);
                    }
                }
                None => {
                    stable = false;
                    break 'gens;
                }
            }
        }
        mats.insert(g, a);
    }
    let module = if stable {
        let parities: Vec<Parity> = basis
            .iter()
            .map(|b| {
                let (s, t, r, c, _) = &b.terms[0];
                context.term_parity(*s, *t, *r, *c)
            })
            .collect();
        let n = idx.size();
        let label = words.iter().map(|w| w.to_string()).collect::<Vec<_>>().join("+");
        Some(RepModule::from_parts(
            idx,
            GradedSpace::new(parities),
            (0..n).map(|a| mats[&Generator::K(a)].clone()).collect(),
            (0..n).map(|a| mats[&Generator::Kinv(a)].clone()).collect(),
            (0..n - 1).map(|b| mats[&Generator::E(b)].clone()).collect(),
            (0..n - 1).map(|b| mats[&Generator::F(b)].clone()).collect(),
            format!("E({})[{label}]", v.provenance()),
        )?)
    } else {
        None
    };
    Ok(InducedSpace {
        context,
        basis,
        module,
        conditions_hold,
    })
}

/// All block words `E^k ⊗ Ebar^l` with `k + l ≤ degree`.
pub fn block_words(degree: usize) -> Vec<TensorWord> {
    let mut out = Vec::new();
    for total in 0..=degree {
        for k in (0..=total).rev() {
            out.push(TensorWord::block(k, total - k));
        }
    }
    out
}
