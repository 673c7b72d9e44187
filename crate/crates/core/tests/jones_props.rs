use proptest::prelude::*;
use sl3jones::jones::{jones_rosso, jones_t2b, TorusKnotSpec};
use sl3jones::sl3rep::Weight;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dual_color_gives_same_polynomial(m1 in 0u32..=6, m2 in 0u32..=6, b in prop::sample::select(vec![1u32, 3, 5])) {
        let w = Weight::new(m1, m2);
        prop_assert_eq!(jones_t2b(b, w).unwrap().value, jones_t2b(b, w.dual()).unwrap().value);
    }

    #[test]
    fn integral_and_normalized(m1 in 0u32..=6, m2 in 0u32..=6, b in prop::sample::select(vec![3u32, 5, 7])) {
        let v = jones_t2b(b, Weight::new(m1, m2)).unwrap().value;
        prop_assert_eq!(v.scale(), 1);
        prop_assert_eq!(v.eval_one(), 1.into());
    }
}

#[test]
fn both_formulas_agree_for_two_strands() {
    for b in [1u32, 3, 5] {
        let knot = TorusKnotSpec::new(2, b).unwrap();
        for m1 in 0..=3 {
            for m2 in 0..=3 {
                let w = Weight::new(m1, m2);
                assert_eq!(jones_rosso(knot, w).unwrap().value, jones_t2b(b, w).unwrap().value, "b={b} {w:?}");
            }
        }
    }
}

#[test]
fn three_strand_trefoil_is_integral() {
    let knot = TorusKnotSpec::new(3, 4).unwrap();
    for m1 in 0..=2 {
        for m2 in 0..=2 {
            let v = jones_rosso(knot, Weight::new(m1, m2)).unwrap().value;
            assert_eq!(v.scale(), 1);
            assert_eq!(v.eval_one(), 1.into());
        }
    }
}
