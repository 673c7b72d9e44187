//! General torus knots `T(a,b)` through the oracle plethysm, checked against
//! the closed-form route where both apply.

use sl3jones::{jones_rosso, jones_t2b, TorusKnotSpec, Weight};

fn main() {
    let w = Weight::new(1, 1);
    for (a, b) in [(2, 3), (3, 2), (3, 4), (3, 5), (2, 5)] {
        let knot = TorusKnotSpec::new(a, b).unwrap();
        let j = jones_rosso(knot, w).unwrap();
        if a == 2 {
            assert_eq!(j.value, jones_t2b(b, w).unwrap().value);
        }
        println!("{knot}: {}", j.value);
    }
}
