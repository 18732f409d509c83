//! Randomized checks of the action axioms for `L` and `R`.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::induced::block_words;
use super::HomError;
use crate::coord::{act_l, act_r, GqElement, MatrixCoefficient, ModuleKey};
use crate::scalars::Q;
use crate::uqrep::{cache, Generator, SuperIndex};

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub seed: u64,
    pub samples: usize,
    pub commutation_failures: usize,
    pub composition_failures: usize,
    pub passed: bool,
}

/// A random homogeneous combination of matrix coefficients of one block word.
pub fn random_element(idx: SuperIndex, rng: &mut ChaCha8Rng, degree: usize) -> Result<GqElement, HomError> {
    let words = block_words(degree);
    loop {
        let w = words.choose(rng).expect("nonempty").clone();
        let m = cache::module(idx, &w)?;
        let parity = rng.gen_range(0..2u8);
        let mut f = GqElement::zero(idx);
        for _ in 0..3 {
            let (r, c) = (rng.gen_range(0..m.dim()), rng.gen_range(0..m.dim()));
            if m.parity(r) ^ m.parity(c) != parity {
                continue;
            }
            let x: i64 = rng.gen_range(1..=4);
            let mc = MatrixCoefficient {
                module: ModuleKey::Word(w.clone()),
                row: r,
                col: c,
            };
            f.add_term(mc, Q::from_int(x));
        }
        if !f.is_zero() {
            return Ok(f);
        }
    }
}

/// `L_x R_y f = (-1)^{[x][y]} R_y L_x f`, and `A_{xy} = A_x A_y` for both actions.
pub fn check_action_axioms(idx: SuperIndex, seed: u64, samples: usize) -> Result<AxiomReport, HomError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = idx.generators();
    let mut commutation_failures = 0;
    let mut composition_failures = 0;
    for _ in 0..samples {
        let f = random_element(idx, &mut rng, 2)?;
        let x: Generator = *gens.choose(&mut rng).expect("generators");
        let y: Generator = *gens.choose(&mut rng).expect("generators");
        let lr = act_l(&[x], &act_r(&[y], &f)?)?;
        let mut rl = act_r(&[y], &act_l(&[x], &f)?)?;
        if x.parity(&idx) & y.parity(&idx) == 1 {
            rl = rl.scale(&Q::from_int(-1));
        }
        if lr != rl {
            commutation_failures += 1;
        }
        let w = [x, y];
        let r_ok = act_r(&w, &f)? == act_r(&[x], &act_r(&[y], &f)?)?;
        let l_ok = act_l(&w, &f)? == act_l(&[x], &act_l(&[y], &f)?)?;
        if !(r_ok && l_ok) {
            composition_failures += 1;
        }
    }
    Ok(AxiomReport {
        seed,
        samples,
        commutation_failures,
        composition_failures,
        passed: commutation_failures == 0 && composition_failures == 0,
    })
}
