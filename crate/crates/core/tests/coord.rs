use superq::coord::peter_weyl::{lift, multiply_raw};
use superq::coord::signs::{self, words_up_to, CoproductSign, ProductSign};
use superq::coord::{act_l, act_r, check_independence, mixed_factorization, multiply, reduce, GqElement, ModuleKey};
use superq::linalg::elim::rank_exact;
use superq::rmatrix::ensure_calibrated;
use superq::scalars::Q;
use superq::uqrep::convention::word_parity;
use superq::uqrep::{Generator, SuperIndex, Weight};

fn gl11() -> SuperIndex {
    ensure_calibrated().unwrap();
    SuperIndex::new(1, 1).unwrap()
}

#[test]
fn pairing_examples() {
    let idx = gl11();
    assert_eq!(GqElement::t(idx, 0, 1).pair(&[Generator::E(0)]).unwrap(), Q::one());
    assert_eq!(GqElement::t(idx, 0, 0).pair(&[Generator::K(0)]).unwrap(), Q::q());
    assert_eq!(GqElement::t(idx, 1, 1).pair(&[Generator::K(0)]).unwrap(), Q::one());
    assert_eq!(GqElement::t(idx, 0, 1).pair(&[]).unwrap(), Q::zero());
    assert_eq!(GqElement::t(idx, 1, 1).pair(&[]).unwrap(), Q::one());
}

#[test]
fn sign_calibration_is_unique() {
    gl11();
    let report = signs::calibrate().unwrap();
    let c = report.chosen.expect("unique passing signs");
    assert_eq!(c.product, ProductSign::RightByLeftRow);
    assert_eq!(c.coproduct, CoproductSign::Koszul);
    for t in report.product_trials.iter().chain(&report.coproduct_trials) {
        let passing = t.label == format!("{:?}", c.product) || t.label == format!("{:?}", c.coproduct);
        assert_eq!(t.failures == 0, passing, "{}", t.label);
    }
}

#[test]
fn pairing_is_multiplicative_up_to_length_three() {
    let idx = gl11();
    let sign = signs::ensure().unwrap().product;
    let elems = signs::generators(idx);
    let words = words_up_to(&idx.generators(), 3);
    assert_eq!(signs::product_failures(idx, sign, &elems[..4], &words).unwrap(), 0);
    assert_eq!(signs::product_failures(idx, sign, &elems[4..], &words).unwrap(), 0);
}

#[test]
fn products_of_t_span_eight() {
    let idx = gl11();
    let mut rows = Vec::new();
    let mut keys = std::collections::BTreeMap::new();
    let mut elems = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    elems.push(multiply(&GqElement::t(idx, a, b), &GqElement::t(idx, c, d)).unwrap());
                }
            }
        }
    }
    for f in &elems {
        for mc in f.terms().keys() {
            assert!(matches!(mc.module, ModuleKey::Irrep(_)));
            let n = keys.len();
            keys.entry(mc.clone()).or_insert(n);
        }
    }
    for f in &elems {
        let mut row: Vec<(usize, Q)> = f.terms().iter().map(|(k, v)| (keys[k], v.clone())).collect();
        row.sort_by_key(|p| p.0);
        rows.push(row);
    }
    assert_eq!(rank_exact(&rows), 8);
}

#[test]
fn t11_squared_in_peter_weyl_form() {
    let idx = gl11();
    let f = multiply(&GqElement::t(idx, 0, 0), &GqElement::t(idx, 0, 0)).unwrap();
    let hws: std::collections::BTreeSet<Weight> = f
        .terms()
        .keys()
        .map(|mc| match &mc.module {
            ModuleKey::Irrep(hw) => hw.clone(),
            _ => panic!("word term left"),
        })
        .collect();
    assert_eq!(hws.into_iter().collect::<Vec<_>>(), vec![Weight(vec![2, 0])]);
    // Same functional as the raw product.
    let raw = multiply_raw(&GqElement::t(idx, 0, 0), &GqElement::t(idx, 0, 0), ProductSign::RightByLeftRow).unwrap();
    for w in words_up_to(&idx.generators(), 3) {
        assert_eq!(f.pair(&w).unwrap(), raw.pair(&w).unwrap());
    }
    assert_eq!(reduce(&f).unwrap().element, f);
    assert_eq!(lift(&f).unwrap().pair(&[Generator::K(0)]).unwrap(), Q::q_pow(2));
}

#[test]
fn unit_and_parity() {
    let idx = gl11();
    let t = GqElement::t(idx, 0, 1);
    assert_eq!(multiply(&GqElement::unit(idx), &t).unwrap(), reduce(&t).unwrap().element);
    assert_eq!(multiply(&t, &GqElement::unit(idx)).unwrap(), reduce(&t).unwrap().element);
    let tb = GqElement::tbar(idx, 1, 0);
    let p = multiply(&t, &tb).unwrap();
    assert_eq!(p.parity().unwrap(), Some(0));
    let p = multiply(&t, &GqElement::t(idx, 0, 0)).unwrap();
    assert_eq!(p.parity().unwrap(), Some(1));
}

#[test]
fn right_action_examples() {
    let idx = gl11();
    let t12 = GqElement::t(idx, 0, 1);
    assert_eq!(act_r(&[Generator::K(0)], &t12).unwrap(), t12);
    assert_eq!(act_r(&[], &t12).unwrap(), t12);
    let r = act_r(&[Generator::E(0)], &t12).unwrap();
    assert!(r == GqElement::t(idx, 0, 0) || r == GqElement::t(idx, 0, 0).scale(&Q::from_int(-1)));
    // L_{K_1} scales by the inverse eigenvalue of the row.
    let t11 = GqElement::t(idx, 0, 0);
    assert_eq!(act_l(&[Generator::K(0)], &t11).unwrap(), t11.scale(&Q::q_pow(-1)));
    assert_eq!(act_l(&[], &t11).unwrap(), t11);
}

fn samples(idx: SuperIndex) -> Vec<GqElement> {
    let mut out = signs::generators(idx);
    out.push(multiply(&GqElement::t(idx, 0, 1), &GqElement::tbar(idx, 1, 1)).unwrap());
    out.push(multiply(&GqElement::tbar(idx, 0, 1), &GqElement::t(idx, 0, 1)).unwrap());
    out
}

#[test]
fn left_and_right_graded_commute() {
    let idx = gl11();
    let gens = idx.generators();
    for f in samples(idx) {
        for &x in &gens {
            for &y in &gens {
                let lr = act_l(&[x], &act_r(&[y], &f).unwrap()).unwrap();
                let rl = act_r(&[y], &act_l(&[x], &f).unwrap()).unwrap();
                let rl = if x.parity(&idx) & y.parity(&idx) == 1 { rl.scale(&Q::from_int(-1)) } else { rl };
                assert_eq!(lr, rl, "{x} {y} {f}");
            }
        }
    }
}

#[test]
fn actions_compose_over_words() {
    let idx = gl11();
    let gens = idx.generators();
    for f in samples(idx) {
        for &x in &gens {
            for &y in &gens {
                let w = [x, y];
                assert_eq!(act_r(&w, &f).unwrap(), act_r(&[x], &act_r(&[y], &f).unwrap()).unwrap());
                assert_eq!(act_l(&w, &f).unwrap(), act_l(&[x], &act_l(&[y], &f).unwrap()).unwrap());
                assert_eq!(word_parity(&w, &idx), x.parity(&idx) ^ y.parity(&idx));
            }
        }
    }
}

#[test]
fn peter_weyl_independence_small() {
    let idx = gl11();
    let r = check_independence(idx, 0, 0, 0).unwrap();
    assert!(r.passed);
    assert_eq!(r.coefficients, 1);
    let r = check_independence(idx, 2, 0, 4).unwrap();
    assert!(r.passed, "{r:?}");
    assert_eq!(r.coefficients, 1 + 4 + 4 + 4);
}

#[test]
fn mixed_factorization_block_one_one() {
    let idx = gl11();
    let r = mixed_factorization(idx, 1, 1).unwrap();
    assert!(r.passed, "{r:?}");
}
