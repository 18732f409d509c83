//! Shared, read-mostly caches of tensor modules and their decompositions.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::convention::{self, Convention};
use super::decompose::{decompose, Decomposition};
use super::index::SuperIndex;
use super::module::RepModule;
use super::word::{Factor, TensorWord};
use super::RepError;

type Key = (SuperIndex, TensorWord);

fn modules() -> &'static RwLock<HashMap<Key, Arc<RepModule>>> {
    static C: OnceLock<RwLock<HashMap<Key, Arc<RepModule>>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn decompositions() -> &'static RwLock<HashMap<Key, Arc<Decomposition>>> {
    static C: OnceLock<RwLock<HashMap<Key, Arc<Decomposition>>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// Build a tensor word module under an explicit convention, without caching.
pub fn build_word(idx: SuperIndex, word: &TensorWord, conv: &Convention) -> RepModule {
    let e = RepModule::vector(idx, conv);
    let eb = RepModule::dual(&e, conv);
    let mut acc: Option<RepModule> = None;
    for f in &word.0 {
        let next = if *f == Factor::E { &e } else { &eb };
        acc = Some(match acc {
            None => next.clone(),
            Some(a) => RepModule::tensor(&a, next, conv),
        });
    }
    acc.unwrap_or_else(|| RepModule::trivial(idx))
        .with_provenance(word.to_string())
}

/// The module of a tensor word under the published convention.
pub fn module(idx: SuperIndex, word: &TensorWord) -> Result<Arc<RepModule>, RepError> {
    let key = (idx, word.clone());
    if let Some(m) = modules().read().unwrap().get(&key) {
        return Ok(m.clone());
    }
    let conv = convention::global()?;
    let built = match word.prefix() {
        None => RepModule::trivial(idx),
        Some((rest, f)) => {
            let single = TensorWord(vec![f]);
            if rest.is_empty() {
                build_word(idx, &single, &conv)
            } else {
                let a = module(idx, &rest)?;
                let b = module(idx, &single)?;
                RepModule::tensor(&a, &b, &conv).with_provenance(word.to_string())
            }
        }
    };
    let arc = Arc::new(built);
    modules().write().unwrap().entry(key).or_insert(arc.clone());
    Ok(arc)
}

pub fn decomposition(idx: SuperIndex, word: &TensorWord) -> Result<Arc<Decomposition>, RepError> {
    let key = (idx, word.clone());
    if let Some(d) = decompositions().read().unwrap().get(&key) {
        return Ok(d.clone());
    }
    let m = module(idx, word)?;
    let arc = Arc::new(decompose(&m));
    decompositions().write().unwrap().entry(key).or_insert(arc.clone());
    Ok(arc)
}
