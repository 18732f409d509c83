use std::collections::BTreeSet;

use superq::rmatrix::ensure_calibrated;
use superq::uqrep::cache::{decomposition, module};
use superq::uqrep::decompose::{highest_weight_vectors, lowest_weight};
use superq::uqrep::{dagger, enumerate_lambda, hom_dim, RepModule, SuperIndex, TensorWord, Variance, Weight};

fn idx(m: usize, n: usize) -> SuperIndex {
    SuperIndex::new(m, n).unwrap()
}

fn w(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}

fn word(s: &str) -> TensorWord {
    s.parse().unwrap()
}

#[test]
fn dual_highest_weight_and_trivial_summand() {
    ensure_calibrated().unwrap();
    let i = idx(1, 1);
    let eb = module(i, &word("Ebar")).unwrap();
    let hw = highest_weight_vectors(&eb);
    assert_eq!(hw.len(), 1);
    assert_eq!(hw[0].0, w(&[0, -1]));
    let d = decomposition(i, &word("Ebar*E")).unwrap();
    let trivial = d.summands.iter().filter(|s| s.highest_weight.is_zero() && s.module.dim() == 1).count();
    assert_eq!(trivial, 1);
}

#[test]
fn square_of_vector_module() {
    ensure_calibrated().unwrap();
    let i = idx(1, 1);
    let ee = module(i, &word("E^2")).unwrap();
    let hw: Vec<Weight> = highest_weight_vectors(&ee).into_iter().map(|(w, _)| w).collect();
    assert_eq!(hw, vec![w(&[2, 0]), w(&[1, 1])]);
    let d = decomposition(i, &word("E^2")).unwrap();
    let got: Vec<(Weight, usize)> = d.summands.iter().map(|s| (s.highest_weight.clone(), s.module.dim())).collect();
    assert_eq!(got, vec![(w(&[2, 0]), 2), (w(&[1, 1]), 2)]);
    assert_eq!(d.residue_dim, 0);
}

#[test]
fn mixed_product_is_not_completely_reducible() {
    ensure_calibrated().unwrap();
    let d = decomposition(idx(1, 1), &word("E*Ebar")).unwrap();
    assert_eq!(d.summands.len(), 1);
    assert!(d.summands[0].highest_weight.is_zero());
    assert_eq!(d.residue_dim, 3);
}

#[test]
fn tensor_powers_are_completely_reducible() {
    ensure_calibrated().unwrap();
    for (m, n) in [(1, 1), (2, 1)] {
        for k in 1..=3 {
            for f in ["E", "Ebar"] {
                let d = decomposition(idx(m, n), &word(&format!("{f}^{k}"))).unwrap();
                let total: usize = d.summands.iter().map(|s| s.module.dim()).sum();
                assert_eq!(total, (m + n).pow(k as u32), "({m},{n}) {f}^{k}");
                assert_eq!(d.residue_dim, 0);
            }
        }
    }
}

#[test]
fn extracted_irreps_are_irreducible_and_satisfy_relations() {
    ensure_calibrated().unwrap();
    let d = decomposition(idx(2, 1), &word("E^2")).unwrap();
    for s in &d.summands {
        assert!(s.module.relation_failures(true).is_empty());
        assert_eq!(hom_dim(&s.module, &s.module, &s.module.idx().generators()), 1);
    }
}

#[test]
fn irreps_with_equal_highest_weight_have_equal_matrices() {
    ensure_calibrated().unwrap();
    let i = idx(1, 1);
    let d = decomposition(i, &word("E^3")).unwrap();
    let mut seen: Vec<(Weight, u8, RepModule)> = Vec::new();
    let mut repeats = 0;
    for s in &d.summands {
        for (hw, p, m) in &seen {
            if *hw == s.highest_weight && *p == s.parity {
                repeats += 1;
                for g in i.generators() {
                    assert_eq!(m.act(g), s.module.act(g));
                }
            }
        }
        seen.push((s.highest_weight.clone(), s.parity, s.module.clone()));
    }
    assert!(repeats > 0);
}

#[test]
fn lowest_weight_and_dagger() {
    ensure_calibrated().unwrap();
    let i = idx(1, 1);
    let e = module(i, &word("E")).unwrap();
    assert_eq!(lowest_weight(&e).unwrap(), w(&[0, 1]));
    assert_eq!(dagger(i, &w(&[1, 0]), Variance::Contravariant).unwrap(), w(&[0, -1]));
    assert_eq!(dagger(i, &w(&[0, 0]), Variance::Contravariant).unwrap(), w(&[0, 0]));
    assert!(dagger(i, &w(&[0, 3]), Variance::Contravariant).is_err());
}

#[test]
fn lambda_sets_small_degree() {
    ensure_calibrated().unwrap();
    let i = idx(1, 1);
    let zero: BTreeSet<Weight> = [w(&[0, 0])].into();
    assert_eq!(enumerate_lambda(i, 0, Variance::Contravariant).unwrap(), zero);
    let l1 = enumerate_lambda(i, 1, Variance::Contravariant).unwrap();
    assert_eq!(l1, [w(&[0, 0]), w(&[1, 0])].into());
    let a = enumerate_lambda(i, 2, Variance::Contravariant).unwrap();
    let b = enumerate_lambda(i, 2, Variance::Covariant).unwrap();
    assert_eq!(a.intersection(&b).cloned().collect::<BTreeSet<_>>(), zero);
}
