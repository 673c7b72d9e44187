//! Colored Jones polynomial of the trefoil `T(2,3)`.
//!
//! `cargo run --example trefoil -- 5 7` prints `J(q^-1)` for color (5,7).

use sl3jones::{jones_t2b, Variable, Weight};

fn main() {
    let args: Vec<u32> = std::env::args().skip(1).map(|a| a.parse().expect("color entries are integers")).collect();
    let (m1, m2) = match args[..] {
        [m1, m2] => (m1, m2),
        [] => (1, 0),
        _ => panic!("usage: trefoil [M1 M2]"),
    };
    let j = jones_t2b(3, Weight::new(m1, m2)).expect("T(2,3) is valid").in_variable(Variable::QInverse);
    println!("J(T(2,3); {m1},{m2}) at q^-1 has {} terms:", j.value.len());
    println!("{}", j.value);
}
