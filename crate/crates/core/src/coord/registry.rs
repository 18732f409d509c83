//! Module lookup for matrix-coefficient keys and the canonical irreps.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use super::CoordError;
use crate::linalg::{Matrix, Span};
use crate::scalars::Q;
use crate::uqrep::cache;
use crate::uqrep::{RepModule, SuperIndex, TensorWord, Variance, Weight};

/// Which module a matrix coefficient refers to.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModuleKey {
    /// A mixed tensor word module.
    Word(TensorWord),
    /// The canonical irrep of the given highest weight.
    Irrep(Weight),
}

impl fmt::Display for ModuleKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleKey::Word(w) => write!(f, "{w}"),
            ModuleKey::Irrep(hw) => write!(f, "W{hw}"),
        }
    }
}

/// A canonical irrep together with its position in its parent word module.
#[derive(Clone, Debug)]
pub struct IrrepRecord {
    pub module: Arc<RepModule>,
    pub parent: TensorWord,
    /// Columns are the irrep basis inside the parent (`d × r`).
    pub embedding: Matrix,
    /// Projection onto the irrep along the other summands (`r × d`).
    pub projection: Matrix,
}

/// Block-diagonalisation of a completely reducible word module.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub summands: Vec<(Weight, Matrix, Matrix)>,
}

type IrrepMap = HashMap<(SuperIndex, Weight), Arc<IrrepRecord>>;
type ReductionMap = HashMap<(SuperIndex, TensorWord), Option<Arc<Reduction>>>;

fn irreps() -> &'static RwLock<IrrepMap> {
    static C: OnceLock<RwLock<IrrepMap>> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn reductions() -> &'static RwLock<ReductionMap> {
    static C: OnceLock<RwLock<ReductionMap>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// Reduction data for a word module, `None` if it is not completely reducible.
/// Newly met highest weights become canonical irreps; repeated ones are
/// checked to have identical matrices.
pub fn reduction(idx: SuperIndex, word: &TensorWord) -> Result<Option<Arc<Reduction>>, CoordError> {
    let key = (idx, word.clone());
    if let Some(r) = reductions().read().unwrap().get(&key) {
        return Ok(r.clone());
    }
    let d = cache::decomposition(idx, word)?;
    let result = if !d.completely_reducible() {
        None
    } else {
        let dim = d.dim;
        let mut span = Span::new();
        for s in &d.summands {
            for b in &s.embedding {
                span.insert(b);
            }
        }
        let inv_cols: Vec<Vec<(usize, Q)>> = (0..dim)
            .map(|j| span.coords(&vec![(j, Q::one())]).expect("summands span the module"))
            .collect();
        let mut summands = Vec::new();
        let mut offset = 0;
        for s in &d.summands {
            let r = s.module.dim();
            let mut emb = Matrix::zeros(dim, r);
            for (c, b) in s.embedding.iter().enumerate() {
                for (i, x) in b {
                    emb.set(*i, c, x.clone());
                }
            }
            let mut proj = Matrix::zeros(r, dim);
            for (j, col) in inv_cols.iter().enumerate() {
                for (p, x) in col {
                    if (offset..offset + r).contains(p) {
                        proj.set(p - offset, j, x.clone());
                    }
                }
            }
            register_irrep(idx, &s.highest_weight, &s.module, word, &emb, &proj)?;
            summands.push((s.highest_weight.clone(), emb, proj));
            offset += r;
        }
        Some(Arc::new(Reduction { summands }))
    };
    reductions().write().unwrap().insert(key, result.clone());
    Ok(result)
}

fn register_irrep(
    idx: SuperIndex,
    hw: &Weight,
    module: &RepModule,
    parent: &TensorWord,
    embedding: &Matrix,
    projection: &Matrix,
) -> Result<(), CoordError> {
    let key = (idx, hw.clone());
    if let Some(existing) = irreps().read().unwrap().get(&key) {
        let same = idx.generators().into_iter().all(|g| existing.module.act(g) == module.act(g));
        return if same { Ok(()) } else { Err(CoordError::CanonicalMismatch(hw.clone())) };
    }
    let rec = IrrepRecord {
        module: Arc::new(module.clone().with_provenance(format!("W{hw}"))),
        parent: parent.clone(),
        embedding: embedding.clone(),
        projection: projection.clone(),
    };
    irreps().write().unwrap().entry(key).or_insert_with(|| Arc::new(rec));
    Ok(())
}

/// The canonical irrep of highest weight `hw`, extracting it from the
/// matching pure tensor power on first use.
pub fn irrep(idx: SuperIndex, hw: &Weight) -> Result<Arc<IrrepRecord>, CoordError> {
    let key = (idx, hw.clone());
    if let Some(r) = irreps().read().unwrap().get(&key) {
        return Ok(r.clone());
    }
    let word = if hw.is_zero() {
        TensorWord::trivial()
    } else if let Some(k) = Variance::Contravariant.degree_of(hw).filter(|&k| k > 0) {
        TensorWord::block(k, 0)
    } else if let Some(l) = Variance::Covariant.degree_of(hw) {
        TensorWord::block(0, l)
    } else {
        return Err(CoordError::UnknownIrrep(hw.clone()));
    };
    reduction(idx, &word)?;
    irreps()
        .read()
        .unwrap()
        .get(&key)
        .cloned()
        .ok_or_else(|| CoordError::UnknownIrrep(hw.clone()))
}

pub fn module_of(idx: SuperIndex, key: &ModuleKey) -> Result<Arc<RepModule>, CoordError> {
    match key {
        ModuleKey::Word(w) => Ok(cache::module(idx, w)?),
        ModuleKey::Irrep(hw) => Ok(irrep(idx, hw)?.module.clone()),
    }
}
