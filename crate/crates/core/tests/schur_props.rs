use proptest::prelude::*;
use sl3jones::plethysm2::{psi2_closed, signed_dimension};
use sl3jones::schur3::{adams, character, decompose_schur, psi_oracle, reconstruct, to_sl3, SymPoly3};
use sl3jones::sl3rep::Weight;

fn weight(max: u32) -> impl Strategy<Value = Weight> {
    (0..=max, 0..=max).prop_map(|(a, b)| Weight::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn decompose_then_reconstruct(w1 in weight(4), w2 in weight(3)) {
        let f = &character(w1).unwrap() * &character(w2).unwrap();
        prop_assert_eq!(reconstruct(&decompose_schur(&f).unwrap()).unwrap(), f);
    }

    #[test]
    fn adams_is_a_ring_homomorphism(w1 in weight(3), w2 in weight(3), a in 2u32..=3) {
        let (f, g) = (character(w1).unwrap(), character(w2).unwrap());
        prop_assert_eq!(adams(&(&f * &g), a), &adams(&f, a) * &adams(&g, a));
        prop_assert_eq!(adams(&(&f + &g), a), &adams(&f, a) + &adams(&g, a));
    }

    #[test]
    fn psi2_multiplicities_are_signs(w in weight(7)) {
        let s = psi_oracle(w, 2).unwrap();
        prop_assert!(s.iter().all(|(_, c)| c == 1 || c == -1));
    }
}

#[test]
fn psi3_can_repeat_a_summand() {
    let s = psi_oracle(Weight::new(1, 1), 3).unwrap();
    assert_eq!(s.get(Weight::zero()), 2);
}

#[test]
fn signed_dimension_is_conserved() {
    for a in [2u32, 3] {
        for m1 in 0..=8 {
            for m2 in 0..=8 {
                let w = Weight::new(m1, m2);
                let s = psi_oracle(w, a).unwrap();
                assert_eq!(signed_dimension(&s), i128::from(w.dimension()), "a={a} {w:?}");
            }
        }
    }
}

#[test]
fn oracle_agrees_with_closed_formula_on_products() {
    let w = Weight::new(2, 1);
    let via_expansion = to_sl3(&decompose_schur(&adams(&character(w).unwrap(), 2)).unwrap()).unwrap();
    assert_eq!(via_expansion, psi2_closed(w));
    assert!(SymPoly3::one().is_one());
}
