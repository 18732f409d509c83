use proptest::prelude::*;
use superq::linalg::elim::{rank_exact, rank_mod_p, sparse_rows};
use superq::linalg::{kernel, rank, Matrix};
use superq::scalars::Q;

fn entry() -> impl Strategy<Value = Q> {
    prop_oneof![
        3 => Just(Q::zero()),
        2 => (-3i64..=3).prop_map(Q::from_int),
        1 => (-2i64..=2).prop_map(Q::q_pow),
        1 => (-2i64..=2).prop_map(|c| &Q::from_int(c) + &Q::q()),
    ]
}

fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(entry(), c), r).prop_map(Matrix::from_rows)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kron_is_associative(a in matrix(2), b in matrix(2), c in matrix(2)) {
        prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
    }

    #[test]
    fn kron_mixed_product(a in matrix(2), b in matrix(2)) {
        let (at, bt) = (a.transpose(), b.transpose());
        prop_assert_eq!(&a.kron(&b) * &at.kron(&bt), (&a * &at).kron(&(&b * &bt)));
    }

    #[test]
    fn rank_plus_nullity(a in matrix(5)) {
        let ker = kernel(&a);
        prop_assert_eq!(rank(&a) + ker.len(), a.cols());
        for v in &ker {
            prop_assert!(a.apply(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn modular_rank_is_a_lower_bound(a in matrix(5), seed in 0u64..100) {
        let rows = sparse_rows(&a);
        if let Some(r) = rank_mod_p(&rows, a.cols(), seed) {
            prop_assert!(r <= rank_exact(&rows));
        }
        prop_assert_eq!(rank(&a), rank_exact(&rows));
    }
}
