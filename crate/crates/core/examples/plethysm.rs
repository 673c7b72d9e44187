//! Second Adams operation on `V_{m1,m2}` in three independent ways: the closed
//! weight sum, the two-row Schur form and brute-force symmetric polynomials.

use sl3jones::plethysm2::{psi2_closed, psi2_schur_form, signed_dimension};
use sl3jones::schur3::psi_oracle;
use sl3jones::Weight;

fn main() {
    let w = Weight::new(2, 1);
    let closed = psi2_closed(w);
    let schur = psi2_schur_form(i64::from(w.m1 + w.m2), i64::from(w.m2)).unwrap();
    let oracle = psi_oracle(w, 2).unwrap();
    println!("psi2(V_{{2,1}}) = {closed}");
    println!("signed dimension {} = dim V_{{2,1}} = {}", signed_dimension(&closed), w.dimension());
    assert_eq!(closed, schur);
    assert_eq!(closed, oracle);
    println!("psi3(V_{{2,1}}) = {}", psi_oracle(w, 3).unwrap());
}
