//! Randomized checks on permutations past the exhaustive range.

use proptest::prelude::*;

use pipedream_reg::perm::demazure_product;
use pipedream_reg::rajchgot::{factorize, raj_code_blob, BlobDiagram};
use pipedream_reg::{raj_code, Monomial, Permutation, SparsePoly, TermOrder};

fn perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n).prop_flat_map(|n| {
        Just((1..=n as u8).collect::<Vec<u8>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    })
}

fn perm_pair(n: usize) -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    let one = move || {
        Just((1..=n as u8).collect::<Vec<u8>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::new(v).unwrap())
    };
    (one(), one(), one())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn raj_code_routes_agree(w in perm(14)) {
        prop_assert_eq!(raj_code(&w), raj_code_blob(&w));
    }

    #[test]
    fn inverse_is_an_involution(w in perm(14)) {
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert!(w.compose(&w.inverse()).unwrap().is_identity());
    }

    #[test]
    fn factorization_is_length_additive(w in perm(12)) {
        let f = factorize(&w).unwrap();
        prop_assert_eq!(&f.shape, &BlobDiagram::new(&w).shape());
        prop_assert_eq!(f.left.inv() + f.layered().inv() + f.right.inv(), w.inv());
    }

    #[test]
    fn demazure_is_associative((u, v, x) in perm_pair(7)) {
        let a = demazure_product(&demazure_product(&u, &v).unwrap(), &x).unwrap();
        let b = demazure_product(&u, &demazure_product(&v, &x).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn leading_term_is_multiplicative(
        a in prop::collection::vec((prop::collection::vec(0u16..3, 3), prop::collection::vec(0u16..3, 3), 1i64..5), 1..5),
        b in prop::collection::vec((prop::collection::vec(0u16..3, 3), prop::collection::vec(0u16..3, 3), 1i64..5), 1..5),
    ) {
        let build = |ts: &[(Vec<u16>, Vec<u16>, i64)]| {
            ts.iter().fold(SparsePoly::zero(3), |acc, (x, y, c)| {
                &acc + &SparsePoly::term(Monomial::from_exponents(x, y), *c)
            })
        };
        let (p, q) = (build(&a), build(&b));
        for order in [TermOrder::Lex, TermOrder::GradedLex] {
            let (mp, cp) = p.leading_term(order).unwrap();
            let (mq, cq) = q.leading_term(order).unwrap();
            let (m, c) = (&p * &q).leading_term(order).unwrap();
            prop_assert_eq!(m, mp.mul(&mq));
            prop_assert_eq!(c, cp * cq);
        }
    }
}
