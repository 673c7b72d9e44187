//! Quantum dimensions and twists of small sl3 representations, computed both
//! from the closed product and from the Weyl formula over positive roots.

use sl3jones::sl3rep::{qdim_closed, qdim_weyl, twist_monomial, Weight};

fn main() {
    for (m1, m2) in [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (3, 0)] {
        let w = Weight::new(m1, m2);
        let closed = qdim_closed(w).unwrap();
        assert_eq!(closed, qdim_weyl(w).unwrap());
        println!("V_{{{m1},{m2}}}  dim {:>2}  d = {}", w.dimension(), closed.as_integer_laurent().unwrap());
        println!("           theta = {}", twist_monomial(w, 1, 1).unwrap());
    }
}
