use superq::homogeneous::{
    borel_weil_report, frobenius, induce, o_space, ParabolicSign, ParabolicSpec, Space, Subalgebra, Verdict,
};
use superq::homogeneous::aq::aq_block;
use superq::homogeneous::block_words;
use superq::rmatrix::ensure_calibrated;
use superq::uqrep::{cache, decompose, RepModule, SuperIndex, TensorWord, Weight};

fn idx(m: usize, n: usize) -> SuperIndex {
    ensure_calibrated().unwrap();
    SuperIndex::new(m, n).unwrap()
}

fn w(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}

fn word(s: &str) -> TensorWord {
    s.parse().unwrap()
}

#[test]
fn theta_is_validated() {
    assert!(ParabolicSpec::new(idx(2, 1), [3]).is_err());
    assert!(ParabolicSpec::new(idx(2, 1), [0]).is_err());
    assert_eq!(ParabolicSpec::full(idx(2, 1)).theta().len(), 2);
}

#[test]
fn constants_are_the_only_invariants_of_degree_zero() {
    for theta in [vec![], vec![1], vec![1, 2]] {
        let p = ParabolicSpec::new(idx(2, 1), theta).unwrap();
        assert_eq!(aq_block(&p, 0, 0).unwrap().dim(), 1);
    }
}

#[test]
fn full_theta_gives_group_invariants() {
    // Left-invariant coefficients of a completely reducible module come
    // from its trivial summands only.
    let i = idx(2, 1);
    let p = ParabolicSpec::full(i);
    for (k, l, s) in [(1, 0, "E"), (0, 1, "Ebar"), (1, 1, "E*Ebar")] {
        let d = cache::decomposition(i, &word(s)).unwrap();
        assert!(d.completely_reducible());
        let trivial = d.summands.iter().filter(|x| x.module.dim() == 1 && x.highest_weight.is_zero()).count();
        assert_eq!(aq_block(&p, k, l).unwrap().dim(), trivial, "{s}");
    }
}

#[test]
fn restriction_to_the_levi_part() {
    let i = idx(2, 1);
    let e = cache::module(i, &word("E")).unwrap();
    let p = ParabolicSpec::new(i, [1]).unwrap();
    let ek = p.restrict(&e, Subalgebra::Levi);
    assert!(!p.is_k_irreducible(&ek));
    let top = p.k_summand(&e, &w(&[1, 0, 0])).unwrap().unwrap();
    let odd = p.k_summand(&e, &w(&[0, 0, 1])).unwrap().unwrap();
    assert_eq!((top.dim(), odd.dim()), (2, 1));
    assert!(p.k_summand(&e, &w(&[0, 1, 0])).unwrap().is_none());
    let full = ParabolicSpec::full(i);
    assert!(full.is_k_irreducible(&full.restrict(&e, Subalgebra::Levi)));
}

#[test]
fn line_modules_of_the_levi_part() {
    let p = ParabolicSpec::new(idx(2, 1), [1, 2]).unwrap();
    assert!(p.admits_line(&w(&[1, 1, -1])));
    assert!(!p.admits_line(&w(&[1, 1, 1])));
    assert!(!p.admits_line(&w(&[1, 0, 0])));
}

#[test]
fn induced_module_from_a_levi_irrep_is_stable() {
    let i = idx(2, 1);
    let p = ParabolicSpec::new(i, [1]).unwrap();
    let v = p.k_summand(&cache::module(i, &word("E")).unwrap(), &w(&[1, 0, 0])).unwrap().unwrap();
    let space = induce(&v, &p.s_k(), &block_words(2)).unwrap();
    assert!(space.conditions_hold);
    assert!(space.l_stable());
    assert!(space.dim() > 0);
    let m = space.module.as_ref().unwrap();
    assert_eq!(decompose(m).summands.iter().map(|s| s.module.dim()).sum::<usize>(), m.dim());
}

#[test]
fn frobenius_against_weight_multiplicities() {
    // For Θ = ∅ the Levi part is the torus, so Hom_k(E, line μ) counts μ among the weights of E.
    let i = idx(1, 1);
    let p = ParabolicSpec::new(i, []).unwrap();
    let e = cache::module(i, &word("E")).unwrap();
    let spaces = e.weight_spaces();
    for mu in [w(&[1, 0]), w(&[0, 1]), w(&[1, 1]), w(&[-1, 0])] {
        let line = RepModule::weight_line(i, &mu, mu.parity(&i)).unwrap();
        let r = frobenius(&p, &e, &line, 2).unwrap();
        let expected = spaces.get(&mu).map_or(0, Vec::len);
        assert!(r.passed, "{mu}");
        assert_eq!((r.hom_g, r.hom_k), (expected, expected), "{mu}");
    }
}

#[test]
fn borel_weil_contravariant_weight() {
    let p = ParabolicSpec::new(idx(2, 1), []).unwrap();
    let r = borel_weil_report(&p, &w(&[1, 0, 0]), 2).unwrap();
    assert!(r.verdicts().all(|v| v == Verdict::Match));
    let row = r.rows.iter().find(|x| x.space == Space::O && x.sign == ParabolicSign::Minus).unwrap();
    assert_eq!(row.found.highest_weights, vec![w(&[1, 0, 0])]);
    assert_eq!(row.found.dim, 3);
    assert!(r.rows.iter().filter(|x| x.predicted.is_none()).all(|x| x.found.dim == 0 && x.zero_up_to == Some(2)));
}

#[test]
fn borel_weil_dagger_row() {
    let i = idx(1, 1);
    let p = ParabolicSpec::new(i, []).unwrap();
    let r = borel_weil_report(&p, &w(&[0, 1]), 2).unwrap();
    let row = r.rows.iter().find(|x| x.space == Space::O && x.sign == ParabolicSign::Plus).unwrap();
    assert_eq!(row.predicted, Some(w(&[1, 0])));
    assert_eq!(row.verdict, Verdict::Match);
    let line = RepModule::weight_line(i, &w(&[0, 1]), w(&[0, 1]).parity(&i)).unwrap();
    let direct = o_space(&p, &line, Space::O, ParabolicSign::Plus, 2).unwrap();
    assert_eq!(direct.0.dim(), row.found.dim);
}
