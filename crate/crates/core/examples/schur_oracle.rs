//! Symmetric polynomials in three variables: Schur decomposition of a product
//! and the sl3 reduction of the result.

use sl3jones::schur3::{character, decompose_schur, to_sl3};
use sl3jones::Weight;

fn main() {
    let adjoint = character(Weight::new(1, 1)).unwrap();
    let square = &adjoint * &adjoint;
    let expansion = decompose_schur(&square).unwrap();
    for (idx, c) in &expansion {
        println!("{c:>3} * s{:?}", idx.0);
    }
    println!("as sl3 modules: {}", to_sl3(&expansion).unwrap());
}
