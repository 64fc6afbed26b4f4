use num_bigint::BigInt;
use proptest::prelude::*;
use qfib_core::poly::PolyJson;
use qfib_core::tiling::{weighted_sum_enumerative, weighted_sum_recursive, AppendSpec, WeightScheme};
use qfib_core::{Monomial, Polynomial};

const K: usize = 3;

fn monomial() -> impl Strategy<Value = Monomial> {
    (-20i64..=20, prop::collection::vec(0u64..4, K), 0u64..6).prop_map(|(c, z, q)| Monomial::new(c, z, q))
}

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(monomial(), 0..6).prop_map(|ms| Polynomial::from_monomials(K, ms).unwrap())
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_is_commutative_and_associative(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn identities_and_inverses(a in poly()) {
        prop_assert_eq!(&a + &Polynomial::zero(K), a.clone());
        prop_assert_eq!(&a * &Polynomial::one(K), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(), b in poly(), z in prop::collection::vec(-3i64..=3, K), q in -3i64..=3) {
        let ev = |p: &Polynomial| p.evaluate(&z, q).unwrap();
        prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
    }

    #[test]
    fn text_round_trip(a in poly()) {
        let text = a.to_string();
        prop_assert_eq!(Polynomial::parse(&text, K).unwrap(), a);
    }

    #[test]
    fn json_round_trip(a in poly()) {
        let s = serde_json::to_string(&a).unwrap();
        let back: Polynomial = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(&back, &a);
        let j: PolyJson = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(Polynomial::from_json(&j).unwrap(), a);
    }

    #[test]
    fn shift_substitution_composes(a in poly(), e in prop::collection::vec(0i64..4, K), f in prop::collection::vec(0i64..4, K)) {
        let sum: Vec<i64> = e.iter().zip(&f).map(|(x, y)| x + y).collect();
        let twice = a.substitute_z_scale(&e).unwrap().substitute_z_scale(&f).unwrap();
        prop_assert_eq!(twice, a.substitute_z_scale(&sum).unwrap());
        prop_assert_eq!(a.substitute_z_scale(&e).unwrap().at_one(), a.at_one());
    }

    #[test]
    fn evaluators_agree_for_random_schemes(seed in 0u64..1000, n in 0i64..9, before in 0usize..4, after in 0usize..4) {
        let w = &WeightScheme::random_family(K, seed, 1)[0];
        let app = AppendSpec::new(before, after);
        prop_assert_eq!(
            weighted_sum_enumerative(n, K, w, app).unwrap(),
            weighted_sum_recursive(n, K, w, app).unwrap()
        );
    }
}

#[test]
fn leading_term_is_highest_in_graded_order() {
    let p = Polynomial::parse("z1 + z2^2 + 3*z1*z2*q", 2).unwrap();
    let lead = p.leading_term().unwrap();
    assert_eq!(lead.coeff, BigInt::from(3));
    assert_eq!(lead.z, vec![1, 1]);
    assert_eq!(lead.q, 1);
}
