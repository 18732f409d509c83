use superq::linalg::{kernel, rank, Matrix};
use superq::rmatrix::calibrate::trial;
use superq::rmatrix::intertwiner::{in_span, normalized_vector_r};
use superq::rmatrix::{
    build_r_pibar_pi, calibrate_coproduct, check_intertwiner, check_yang_baxter, ensure_calibrated,
    hecke_relation, solve_intertwiner,
};
use superq::scalars::Q;
use superq::uqrep::convention::{Convention, Side, FAMILY};
use superq::uqrep::{RepModule, SuperIndex};

fn idx(m: usize, n: usize) -> SuperIndex {
    SuperIndex::new(m, n).unwrap()
}

#[test]
fn closed_form_entries_for_gl11() {
    let r = build_r_pibar_pi(idx(1, 1)).operator;
    let diag: Vec<Q> = (0..4).map(|i| r.get(i, i).clone()).collect();
    assert_eq!(diag, vec![Q::q_pow(-1), Q::one(), Q::one(), Q::q()]);
    // e21⊗e21 sends v1⊗v1 to v2⊗v2 with coefficient +(q - q^{-1}).
    assert_eq!(r.get(3, 0), &Q::hecke());
    assert_eq!(r.nonzeros().count(), 5);
    assert_eq!(rank(&r), 4);
    assert!(kernel(&r).is_empty());
}

#[test]
fn closed_form_is_lower_triangular_and_invertible() {
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (3, 2), (1, 4)] {
        let r = build_r_pibar_pi(idx(m, n)).operator;
        assert!(r.nonzeros().all(|(i, j, _)| i >= j));
        assert!((0..r.rows()).all(|i| !r.get(i, i).is_zero()));
    }
}

#[test]
fn exactly_one_convention_passes() {
    let report = calibrate_coproduct(idx(1, 1));
    assert_eq!(report.passing.len(), 1, "{:#?}", report.passing);
    let c = report.chosen.unwrap();
    assert_eq!(
        c,
        Convention {
            raising: Side::Right,
            lowering: Side::Left,
            orientation: 1
        }
    );
    for (m, n) in [(2, 1), (2, 2), (3, 1)] {
        assert!(trial(idx(m, n), &c).passed, "({m},{n})");
    }
}

#[test]
fn wrong_convention_leaves_residual() {
    let wrong = FAMILY
        .iter()
        .find(|c| c.raising == Side::Left && c.lowering == Side::Left && c.orientation == 1)
        .unwrap();
    let t = trial(idx(1, 1), wrong);
    assert!(!t.intertwiner.passed);
}

#[test]
fn identity_is_not_an_intertwiner() {
    let c = ensure_calibrated().unwrap();
    let e = RepModule::vector(idx(1, 1), &c);
    let eb = RepModule::dual(&e, &c);
    let rep = check_intertwiner(&Matrix::identity(4), &eb, &e, &c).unwrap();
    assert!(!rep.passed);
    assert!(rep.residuals.iter().any(|r| r.generator == "E12"));
    assert!(rep.residuals.iter().all(|r| !r.generator.starts_with('K')));
}

#[test]
fn solution_spaces() {
    let c = ensure_calibrated().unwrap();
    let i = idx(1, 1);
    let e = RepModule::vector(i, &c);
    let eb = RepModule::dual(&e, &c);
    assert_eq!(solve_intertwiner(&e, &e, &c).len(), 2);
    let t = RepModule::trivial(i);
    assert_eq!(solve_intertwiner(&t, &t, &c).len(), 1);
    let sols = solve_intertwiner(&eb, &e, &c);
    assert!(in_span(&sols, &build_r_pibar_pi(i).operator));
}

#[test]
fn yang_baxter_for_vector_intertwiner() {
    let c = ensure_calibrated().unwrap();
    for (m, n) in [(1, 1), (2, 1)] {
        let i = idx(m, n);
        let r = normalized_vector_r(i, &c).expect("triangular member exists");
        assert!(check_yang_baxter(&r.operator, &i.space()).passed, "({m},{n})");
        let e = RepModule::vector(i, &c);
        let ee = RepModule::tensor(&e, &e, &c);
        let h = hecke_relation(&r.operator, &e, &ee);
        assert!(h.passed, "{h:?}");
    }
}

#[test]
fn perturbed_r_fails_yang_baxter() {
    let conv = ensure_calibrated().unwrap();
    let i = idx(2, 1);
    let mut r = normalized_vector_r(i, &conv).unwrap().operator;
    let (a, b) = r.nonzeros().find(|(a, b, _)| a != b).map(|(a, b, _)| (a, b)).unwrap();
    let flipped = -r.get(a, b).clone();
    r.set(a, b, flipped);
    assert!(!check_yang_baxter(&r, &i.space()).passed);
}
