use num_bigint::BigInt;
use proptest::prelude::*;
use sl3jones::laurent::{LaurentJson, ScaledLaurent};

fn poly(scale: u32) -> impl Strategy<Value = ScaledLaurent> {
    prop::collection::vec((-60i64..=60, -9i64..=9), 0..12)
        .prop_map(move |terms| ScaledLaurent::from_terms(scale, terms))
}

fn nonzero(scale: u32) -> impl Strategy<Value = ScaledLaurent> {
    poly(scale).prop_filter("nonzero divisor", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms(a in poly(6), b in poly(6), c in poly(6)) {
        let add = |x: &ScaledLaurent, y: &ScaledLaurent| x.checked_add(y).unwrap();
        let mul = |x: &ScaledLaurent, y: &ScaledLaurent| x.checked_mul(y).unwrap();
        prop_assert_eq!(add(&a, &b), add(&b, &a));
        prop_assert_eq!(mul(&a, &b), mul(&b, &a));
        prop_assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
        prop_assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
        prop_assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));
        prop_assert_eq!(mul(&a, &ScaledLaurent::one(6)), a.clone());
        prop_assert!(add(&a, &a.negate()).is_zero());
    }

    #[test]
    fn div_exact_inverts_mul(a in poly(6), b in nonzero(6)) {
        let prod = a.checked_mul(&b).unwrap();
        prop_assert_eq!(prod.div_exact(&b).unwrap(), a);
    }

    #[test]
    fn mirror_is_an_involutive_homomorphism(a in poly(3), b in poly(3)) {
        prop_assert_eq!(a.checked_mul(&b).unwrap().mirror(), a.mirror().checked_mul(&b.mirror()).unwrap());
        prop_assert_eq!(a.checked_add(&b).unwrap().mirror(), a.mirror().checked_add(&b.mirror()).unwrap());
        prop_assert_eq!(a.mirror().mirror(), a);
    }

    #[test]
    fn eval_one_is_multiplicative(a in poly(6), b in poly(6)) {
        prop_assert_eq!(a.checked_mul(&b).unwrap().eval_one(), a.eval_one() * b.eval_one());
    }

    #[test]
    fn json_round_trip_ascending(a in poly(6)) {
        let text = serde_json::to_string(&a.to_json()).unwrap();
        let back: LaurentJson = serde_json::from_str(&text).unwrap();
        prop_assert!(back.terms.windows(2).all(|w| w[0].0 < w[1].0));
        prop_assert_eq!(ScaledLaurent::from_json(&back).unwrap(), a);
    }

    #[test]
    fn text_round_trip(a in poly(1)) {
        prop_assert_eq!(ScaledLaurent::parse_text(&a.to_string(), 1).unwrap(), a);
    }
}

#[test]
fn big_coefficients_survive_division() {
    let big = BigInt::from(i64::MAX) * BigInt::from(i64::MAX);
    let a = ScaledLaurent::from_terms(1, [(0, big.clone()), (5, -big)]);
    let b = ScaledLaurent::from_terms(1, [(0, 3), (1, -7), (4, 2)]);
    assert_eq!(a.checked_mul(&b).unwrap().div_exact(&b).unwrap(), a);
}
