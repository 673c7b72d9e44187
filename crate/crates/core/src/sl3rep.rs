//! sl3 weight combinatorics: quantum integers, quantum dimensions and twists.
//!
//! Weights are written in the fundamental-weight basis, `λ = m1·ω1 + m2·ω2`.
//! All pairings go through a 2×2 table on `(ω1, ω2)` stored in sixths.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::laurent::{LaurentError, Result, ScaledLaurent};

/// Scale on which every quantity of the `T(2,b)` formula is representable: halves from
/// quantum integers and thirds from twist exponents.
pub const BASE_SCALE: u32 = 6;

/// A dominant sl3 weight `(m1, m2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub m1: u32,
    pub m2: u32,
}

impl Weight {
    pub const fn new(m1: u32, m2: u32) -> Self {
        Weight { m1, m2 }
    }

    pub const fn zero() -> Self {
        Weight { m1: 0, m2: 0 }
    }

    /// The highest weight of the dual representation.
    pub const fn dual(self) -> Self {
        Weight { m1: self.m2, m2: self.m1 }
    }

    /// `m1² + m1·m2 + m2²`
    pub fn quadratic(self) -> i64 {
        let (a, b) = (i64::from(self.m1), i64::from(self.m2));
        a * a + a * b + b * b
    }

    /// `m1 + m2`
    pub fn linear(self) -> i64 {
        i64::from(self.m1) + i64::from(self.m2)
    }

    /// `(m1+1)(m2+1)(m1+m2+2)/2`, the classical dimension.
    pub fn dimension(self) -> u64 {
        let (a, b) = (u64::from(self.m1), u64::from(self.m2));
        (a + 1) * (b + 1) * (a + b + 2) / 2
    }

    pub fn coords(self) -> [i64; 2] {
        [i64::from(self.m1), i64::from(self.m2)]
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m1, self.m2)
    }
}

impl From<(u32, u32)> for Weight {
    fn from((m1, m2): (u32, u32)) -> Self {
        Weight::new(m1, m2)
    }
}

/// Root datum of sl3 in ω-coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootDataSl3 {
    pub simple_roots: [[i64; 2]; 2],
    pub positive_roots: [[i64; 2]; 3],
    pub rho: [i64; 2],
    /// `(ωi, ωj)` in sixths.
    pub pairing_sixths: [[i64; 2]; 2],
}

pub const SL3: RootDataSl3 = RootDataSl3 {
    simple_roots: [[2, -1], [-1, 2]],
    positive_roots: [[2, -1], [-1, 2], [1, 1]],
    rho: [1, 1],
    pairing_sixths: [[4, 2], [2, 4]],
};

impl RootDataSl3 {
    /// Invariant bilinear form on integer ω-coordinate vectors.
    pub fn pairing(&self, u: [i64; 2], v: [i64; 2]) -> Ratio<i64> {
        let sixths: i64 = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| u[i] * v[j] * self.pairing_sixths[i][j])
            .sum();
        Ratio::new(sixths, 6)
    }

    /// `(λ+ρ, α)` for each positive root, always a positive integer for dominant `λ`.
    pub fn shifted_root_pairings(&self, w: Weight) -> [i64; 3] {
        let shifted = [w.coords()[0] + self.rho[0], w.coords()[1] + self.rho[1]];
        self.positive_roots.map(|alpha| {
            let p = self.pairing(shifted, alpha);
            debug_assert!(p.is_integer() && *p.numer() > 0);
            p.to_integer()
        })
    }
}

/// `(u, v)` for the sl3 form.
pub fn pairing(u: [i64; 2], v: [i64; 2]) -> Ratio<i64> {
    SL3.pairing(u, v)
}

/// The quantum integer `[n]` at scale 6; `[0] = 0`.
pub fn qint(n: u32) -> ScaledLaurent {
    ScaledLaurent::one(BASE_SCALE).mul_quantum_integer(n).expect("scale 6 represents every half-integer exponent")
}

/// `[m1+1][m2+1][m1+m2+2] / [2]`.
pub fn qdim_closed(w: Weight) -> Result<ScaledLaurent> {
    let num = ScaledLaurent::one(BASE_SCALE)
        .mul_quantum_integer(w.m1 + 1)?
        .mul_quantum_integer(w.m2 + 1)?
        .mul_quantum_integer(w.m1 + w.m2 + 2)?;
    num.div_exact(&qint(2))
}

/// `Π_{α>0} [(λ+ρ, α)] / [(ρ, α)]`, evaluated from the root datum.
pub fn qdim_weyl(w: Weight) -> Result<ScaledLaurent> {
    let top = SL3.shifted_root_pairings(w);
    let bottom = SL3.shifted_root_pairings(Weight::zero());
    let mut num = ScaledLaurent::one(BASE_SCALE);
    let mut den = ScaledLaurent::one(BASE_SCALE);
    for (t, b) in top.into_iter().zip(bottom) {
        num = num.mul_quantum_integer(t as u32)?;
        den = den.mul_quantum_integer(b as u32)?;
    }
    num.div_exact(&den)
}

/// Scaled exponent of `θ_w^(num/den)` at `scale`, if it is an integer.
///
/// `θ_w = q^(Q/3 + L)` with `Q = m1²+m1m2+m2²`, `L = m1+m2`.
pub fn twist_exponent(w: Weight, num: i64, den: i64, scale: u32) -> Result<i64> {
    let top = i64::from(scale) * num * (w.quadratic() + 3 * w.linear());
    let bottom = 3 * den;
    if den == 0 || top % bottom != 0 {
        return Err(LaurentError::NotRepresentable { exponent: top, from: bottom.unsigned_abs() as u32, to: scale });
    }
    Ok(top / bottom)
}

/// The monomial `θ_w^(num/den)` at scale 6.
pub fn twist_monomial(w: Weight, num: i64, den: i64) -> Result<ScaledLaurent> {
    let e = twist_exponent(w, num, den, BASE_SCALE)?;
    Ok(ScaledLaurent::monomial(BASE_SCALE, e, 1))
}

/// Checks `½(λ, λ+2ρ)` against the closed twist exponent `Q/3 + L`.
pub fn twist_weyl_check(w: Weight) -> bool {
    let lam = w.coords();
    let shifted = [lam[0] + 2 * SL3.rho[0], lam[1] + 2 * SL3.rho[1]];
    let from_form = pairing(lam, shifted) / 2;
    let closed = Ratio::new(w.quadratic(), 3) + w.linear();
    from_form == closed
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(terms: &[(i64, i64)]) -> ScaledLaurent {
        ScaledLaurent::from_terms(6, terms.iter().copied())
    }

    #[test]
    fn root_datum_is_consistent() {
        for i in 0..2 {
            for j in 0..2 {
                let cartan = [[2, -1], [-1, 2]][i][j];
                assert_eq!(pairing(SL3.simple_roots[i], SL3.simple_roots[j]), Ratio::from(cartan));
            }
        }
        let sum = SL3.positive_roots.iter().fold([0, 0], |acc, r| [acc[0] + r[0], acc[1] + r[1]]);
        assert_eq!([sum[0], sum[1]], [2 * SL3.rho[0], 2 * SL3.rho[1]]);
        // ωi are dual to the simple coroots
        assert_eq!(pairing([1, 0], SL3.simple_roots[0]), Ratio::from(1));
        assert_eq!(pairing([1, 0], SL3.simple_roots[1]), Ratio::from(0));
        assert_eq!(pairing([0, 1], SL3.simple_roots[1]), Ratio::from(1));
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing([1, 0], [1, 0]), Ratio::new(2, 3));
        assert_eq!(pairing([2, -1], [2, -1]), Ratio::from(2));
        // (λ, λ+2ρ) at (1,0) is (ω1, 3ω1 + 2ω2)
        assert_eq!(pairing([1, 0], [3, 2]), Ratio::new(8, 3));
    }

    #[test]
    fn quantum_integers() {
        assert!(qint(0).is_zero());
        assert_eq!(qint(1), ScaledLaurent::one(6));
        assert_eq!(qint(2), p(&[(-3, 1), (3, 1)]));
        assert_eq!(qint(3), p(&[(-6, 1), (0, 1), (6, 1)]));
        for n in 0..=50 {
            assert_eq!(qint(n).mirror(), qint(n));
            assert_eq!(qint(n).eval_one(), BigInt::from(n));
        }
    }

    #[test]
    fn closed_quantum_dimension() {
        assert_eq!(qdim_closed(Weight::new(0, 0)).unwrap(), ScaledLaurent::one(6));
        assert_eq!(qdim_closed(Weight::new(1, 0)).unwrap(), qint(3));
        let adjoint = qdim_closed(Weight::new(1, 1)).unwrap();
        assert_eq!(adjoint, p(&[(-12, 1), (-6, 2), (0, 2), (6, 2), (12, 1)]));
        assert_eq!(adjoint.eval_one(), BigInt::from(8));
    }

    #[test]
    fn weyl_quantum_dimension() {
        assert_eq!(SL3.shifted_root_pairings(Weight::new(1, 0)), [2, 1, 3]);
        assert_eq!(qdim_weyl(Weight::zero()).unwrap(), ScaledLaurent::one(6));
        assert_eq!(qdim_weyl(Weight::new(1, 0)).unwrap(), qint(3));
        for m1 in 0..=12 {
            for m2 in 0..=12 {
                let w = Weight::new(m1, m2);
                let closed = qdim_closed(w).unwrap();
                assert_eq!(qdim_weyl(w).unwrap(), closed);
                assert_eq!(closed.eval_one(), BigInt::from(w.dimension()));
                assert_eq!(closed.mirror(), closed);
                assert_eq!(qdim_closed(w.dual()).unwrap(), closed);
            }
        }
    }

    #[test]
    fn twist_examples() {
        assert_eq!(twist_monomial(Weight::new(1, 0), 1, 1).unwrap(), ScaledLaurent::monomial(6, 8, 1));
        assert_eq!(twist_monomial(Weight::new(1, 1), 1, 1).unwrap(), ScaledLaurent::monomial(6, 18, 1));
        assert_eq!(twist_monomial(Weight::zero(), -6, 1).unwrap(), ScaledLaurent::one(6));
        // θ_(1,0)^(1/2) = q^(2/3) is fine at scale 6
        assert_eq!(twist_exponent(Weight::new(1, 0), 1, 2, 6).unwrap(), 4);
        // but q^(4/9) is not
        assert!(twist_exponent(Weight::new(1, 0), 1, 3, 6).is_err());
        assert_eq!(twist_exponent(Weight::new(1, 0), 1, 3, 18).unwrap(), 8);
    }

    #[test]
    fn twist_matches_weyl_form() {
        assert!(twist_weyl_check(Weight::zero()));
        assert!(twist_weyl_check(Weight::new(1, 0)));
        for m1 in 0..=12 {
            for m2 in 0..=12 {
                let w = Weight::new(m1, m2);
                assert!(twist_weyl_check(w));
                assert_eq!(twist_exponent(w, 1, 1, 6).unwrap(), twist_exponent(w.dual(), 1, 1, 6).unwrap());
            }
        }
    }
}
