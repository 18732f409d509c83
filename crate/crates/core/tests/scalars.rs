use proptest::prelude::*;
use superq::scalars::{modp, IntPoly, Q};

const P: u64 = 1_000_000_007;

fn poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-6i64..=6, 0..4).prop_map(|cs| IntPoly::from_i64s(&cs))
}

/// Nonzero rational functions in q, built from small integer polynomials.
fn scalar() -> impl Strategy<Value = Q> {
    (poly(), poly(), -2i64..=2).prop_filter_map("zero denominator", |(a, b, k)| {
        let den = b.add(&IntPoly::monomial(7, 3));
        Q::normalize(a, den).ok().map(|x| &x * &Q::q_pow(k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Q::zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn evaluation_is_a_ring_map(a in scalar(), b in scalar(), q0 in 2u64..1000) {
        let ev = |x: &Q| x.eval_mod_p(q0, P);
        if let (Ok(x), Ok(y)) = (ev(&a), ev(&b)) {
            prop_assert_eq!(ev(&(&a + &b)).unwrap(), modp::add(x, y, P));
            prop_assert_eq!(ev(&(&a * &b)).unwrap(), modp::mul(x, y, P));
        }
    }

    #[test]
    fn gcd_divides_both(a in poly(), b in poly()) {
        let g = a.gcd(&b);
        prop_assume!(!g.is_zero());
        prop_assert!(a.div_exact(&g).is_some());
        prop_assert!(b.div_exact(&g).is_some());
    }
}

#[test]
fn quantum_integer_two() {
    // [2]_q = q + q^{-1}
    let two = &(&Q::q_pow(2) - &Q::q_pow(-2)) * &(&Q::q() - &Q::q_pow(-1)).inv().unwrap();
    assert_eq!(two, &Q::q() + &Q::q_pow(-1));
}
