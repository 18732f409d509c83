//! Faithful coordinates for matrix coefficients.
//!
//! A frame over modules `M_1..M_t` computes a basis of the image of the
//! algebra in `⊕ End(M_i)`, resolved into slots `P_ν A P_μ` by weight. The
//! coordinates of `MC(M_i, r, c)` are its values on the basis of slot
//! `(wt r, wt c)`, so two combinations of matrix coefficients agree as
//! functionals iff their coordinates agree.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::Arc;

use crate::linalg::{Span, SparseVec};
use crate::scalars::Q;
use crate::uqrep::{Generator, RepModule, Weight};

pub type SlotKey = (Weight, Weight);

#[derive(Clone, Debug)]
struct Slot {
    /// Accepted basis elements, flattened over all modules.
    dim: usize,
    /// `(module, row, col)` to coordinates over the slot basis.
    values: HashMap<(usize, usize, usize), SparseVec>,
}

#[derive(Clone, Debug)]
pub struct Frame {
    modules: Vec<Arc<RepModule>>,
    slots: BTreeMap<SlotKey, Slot>,
}

impl Frame {
    pub fn new(modules: Vec<Arc<RepModule>>) -> Self {
        let idx = modules[0].idx();
        let spaces: Vec<BTreeMap<Weight, Vec<usize>>> = modules.iter().map(|m| m.weight_spaces()).collect();
        // Entries of slot elements are enumerated per slot to form sparse vectors.
        let mut enumerations: BTreeMap<SlotKey, HashMap<(usize, usize, usize), usize>> = BTreeMap::new();
        let mut index_of = |slot: &SlotKey, k: (usize, usize, usize)| -> usize {
            let en = enumerations.entry(slot.clone()).or_default();
            let next = en.len();
            *en.entry(k).or_insert(next)
        };
        let gens: Vec<Generator> = idx.raising().into_iter().chain(idx.lowering()).collect();
        let columns: Vec<Vec<Vec<Vec<(usize, Q)>>>> = modules
            .iter()
            .map(|m| {
                gens.iter()
                    .map(|&g| {
                        let a = m.act(g);
                        let mut cols = vec![Vec::new(); m.dim()];
                        for (i, j, x) in a.nonzeros() {
                            cols[j].push((i, x.clone()));
                        }
                        cols
                    })
                    .collect()
            })
            .collect();

        let mut weights: Vec<Weight> = spaces.iter().flat_map(|s| s.keys().cloned()).collect();
        weights.sort();
        weights.dedup();

        let mut spans: BTreeMap<SlotKey, Span> = BTreeMap::new();
        let mut accepted: BTreeMap<SlotKey, Vec<Vec<((usize, usize, usize), Q)>>> = BTreeMap::new();
        let mut queue: VecDeque<(SlotKey, Vec<((usize, usize, usize), Q)>)> = VecDeque::new();

        let mut offer = |slot: SlotKey,
                         elem: Vec<((usize, usize, usize), Q)>,
                         queue: &mut VecDeque<(SlotKey, Vec<((usize, usize, usize), Q)>)>,
                         index_of: &mut dyn FnMut(&SlotKey, (usize, usize, usize)) -> usize| {
            if elem.is_empty() {
                return;
            }
            let mut v: SparseVec = elem.iter().map(|(k, x)| (index_of(&slot, *k), x.clone())).collect();
            v.sort_by_key(|(i, _)| *i);
            let span = spans.entry(slot.clone()).or_default();
            if span.insert(&v).is_some() {
                accepted.entry(slot.clone()).or_default().push(elem.clone());
                queue.push_back((slot, elem));
            }
        };

        for mu in &weights {
            let mut elem = Vec::new();
            for (t, sp) in spaces.iter().enumerate() {
                if let Some(ids) = sp.get(mu) {
                    for &i in ids {
                        elem.push(((t, i, i), Q::one()));
                    }
                }
            }
            offer((mu.clone(), mu.clone()), elem, &mut queue, &mut index_of);
        }
        while let Some(((nu, mu), elem)) = queue.pop_front() {
            for (gi, g) in gens.iter().enumerate() {
                let target = nu.add(&g.weight(&idx));
                let mut acc: BTreeMap<(usize, usize, usize), Q> = BTreeMap::new();
                for ((t, r, c), x) in &elem {
                    for (k, y) in &columns[*t][gi][*r] {
                        let e = acc.entry((*t, *k, *c)).or_insert_with(Q::zero);
                        *e += &(x * y);
                    }
                }
                let out: Vec<_> = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
                offer((target, mu.clone()), out, &mut queue, &mut index_of);
            }
        }

        let mut slots = BTreeMap::new();
        for (key, elems) in accepted {
            let mut values: HashMap<(usize, usize, usize), SparseVec> = HashMap::new();
            for (r, elem) in elems.iter().enumerate() {
                for (k, x) in elem {
                    values.entry(*k).or_default().push((r, x.clone()));
                }
            }
            slots.insert(
                key,
                Slot {
                    dim: elems.len(),
                    values,
                },
            );
        }
        Frame { modules, slots }
    }

    pub fn modules(&self) -> &[Arc<RepModule>] {
        &self.modules
    }

    /// Dimension of the image algebra.
    pub fn dim(&self) -> usize {
        self.slots.values().map(|s| s.dim).sum()
    }

    pub fn slot_dim(&self, key: &SlotKey) -> usize {
        self.slots.get(key).map_or(0, |s| s.dim)
    }

    pub fn slot_keys(&self) -> impl Iterator<Item = &SlotKey> {
        self.slots.keys()
    }

    pub fn slot_of(&self, t: usize, row: usize, col: usize) -> SlotKey {
        let m = &self.modules[t];
        (m.weight(row).clone(), m.weight(col).clone())
    }

    /// Coordinates of `MC(M_t, row, col)` within its slot.
    pub fn coords(&self, t: usize, row: usize, col: usize) -> SparseVec {
        let key = self.slot_of(t, row, col);
        self.slots
            .get(&key)
            .and_then(|s| s.values.get(&(t, row, col)))
            .cloned()
            .unwrap_or_default()
    }
}
