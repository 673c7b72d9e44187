//! Symmetric polynomials in three variables and the Schur basis.
//!
//! This is the brute-force side of every plethysm identity in the crate:
//! characters are honest polynomials, Schur functions are bialternant
//! quotients, and Adams operations are the substitution `xi -> xi^a`.
//! Nothing here depends on the closed forms in [`crate::plethysm2`].

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::plethysm2::SignedWeightSum;
use crate::sl3rep::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Schur3Error {
    #[error("Schur index {0:?} straightens to a partition with a negative part")]
    NegativeIndex([i64; 3]),
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("invalid arguments: {0}")]
    Domain(String),
    #[error("internal error: {0}")]
    Internal(&'static str),
}

pub type Result<T> = std::result::Result<T, Schur3Error>;

pub type Exponent3 = [u32; 3];

/// Integer polynomial in `x1, x2, x3`, keyed by exponent triple.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SymPoly3 {
    terms: BTreeMap<Exponent3, BigInt>,
}

impl SymPoly3 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial([0, 0, 0], 1)
    }

    pub fn monomial(e: Exponent3, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (Exponent3, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, e: Exponent3, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn coeff(&self, e: Exponent3) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent3, &BigInt)> {
        self.terms.iter()
    }

    /// Number of nonzero terms; [`Self::is_zero`] is the emptiness test.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of the coefficients, the character value at the identity.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0, 0, 0]).is_some_and(One::is_one)
    }

    /// Lexicographically largest monomial.
    pub fn leading(&self) -> Option<(Exponent3, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn scalar_mul(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SymPoly3 { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Invariance under the transpositions (12) and (23), hence under all of S3.
    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(&[a, b, c], v)| self.terms.get(&[b, a, c]) == Some(v) && self.terms.get(&[a, c, b]) == Some(v))
    }

    /// Exact division by `x_i - x_j`; `None` if it leaves a remainder.
    fn div_difference(&self, i: usize, j: usize) -> Option<Self> {
        let k = 3 - i - j;
        let key = |e: &Exponent3| (e[i], e[j], e[k]);
        let mut work: BTreeMap<(u32, u32, u32), BigInt> = self.terms.iter().map(|(e, c)| (key(e), c.clone())).collect();
        let mut quot = SymPoly3::zero();
        while let Some(((ei, ej, ek), c)) = work.pop_last() {
            if ei == 0 {
                return None;
            }
            let mut e = [0; 3];
            e[i] = ei - 1;
            e[j] = ej;
            e[k] = ek;
            let next = (ei - 1, ej + 1, ek);
            let slot = work.entry(next).or_default();
            *slot += &c;
            if slot.is_zero() {
                work.remove(&next);
            }
            quot.add_term(e, c);
        }
        Some(quot)
    }
}

impl Add for &SymPoly3 {
    type Output = SymPoly3;
    fn add(self, rhs: &SymPoly3) -> SymPoly3 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &SymPoly3 {
    type Output = SymPoly3;
    fn sub(self, rhs: &SymPoly3) -> SymPoly3 {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Neg for &SymPoly3 {
    type Output = SymPoly3;
    fn neg(self) -> SymPoly3 {
        SymPoly3 { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Mul for &SymPoly3 {
    type Output = SymPoly3;
    fn mul(self, rhs: &SymPoly3) -> SymPoly3 {
        let mut out = SymPoly3::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for SymPoly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*x1^{}*x2^{}*x3^{}", e[0], e[1], e[2])?;
        }
        Ok(())
    }
}

/// A three-part Schur index, possibly out of order.
///
/// The two-index shorthand `s_{a,b}` is `GLIndex([a, b, 0])`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GLIndex(pub [i64; 3]);

impl GLIndex {
    pub const fn two_row(a: i64, b: i64) -> Self {
        GLIndex([a, b, 0])
    }

    /// Shifted exponents `λj + 3 - j` of the bialternant numerator.
    fn shifted(self) -> [i64; 3] {
        let l = self.0;
        [l[0] + 2, l[1] + 1, l[2]]
    }

    /// Rewrites `s_λ` as `sign · s_partition`, or `None` when it vanishes.
    ///
    /// The partition is weakly decreasing but may end in a negative part.
    pub fn straighten(self) -> Option<(i8, GLIndex)> {
        let mut s = self.shifted();
        let mut sign = 1i8;
        // bubble sort into decreasing order, tracking the permutation sign
        for _ in 0..2 {
            for i in 0..2 {
                if s[i] < s[i + 1] {
                    s.swap(i, i + 1);
                    sign = -sign;
                }
            }
        }
        if s[0] == s[1] || s[1] == s[2] {
            return None;
        }
        Some((sign, GLIndex([s[0] - 2, s[1] - 1, s[2]])))
    }

    /// The sl3 weight `(λ1-λ2, λ2-λ3)` of a partition.
    pub fn sl3_weight(self) -> Weight {
        let l = self.0;
        debug_assert!(l[0] >= l[1] && l[1] >= l[2]);
        Weight::new((l[0] - l[1]) as u32, (l[1] - l[2]) as u32)
    }
}

impl From<Exponent3> for GLIndex {
    fn from(e: Exponent3) -> Self {
        GLIndex(e.map(i64::from))
    }
}

/// Signed Schur-basis expansion keyed by partition.
pub type SchurExpansion = BTreeMap<GLIndex, BigInt>;

fn vandermonde_quotient(num: &SymPoly3) -> Result<SymPoly3> {
    let internal = Schur3Error::Internal("bialternant numerator not divisible by the Vandermonde");
    let q = num.div_difference(0, 1).ok_or(internal.clone())?;
    let q = q.div_difference(0, 2).ok_or(internal.clone())?;
    q.div_difference(1, 2).ok_or(internal)
}

/// `det(x_i^(λj+3-j)) / det(x_i^(3-j))`.
pub fn schur(idx: GLIndex) -> Result<SymPoly3> {
    let s = idx.shifted();
    if s[0] == s[1] || s[0] == s[2] || s[1] == s[2] {
        return Ok(SymPoly3::zero());
    }
    if s.iter().any(|&v| v < 0) {
        return Err(Schur3Error::NegativeIndex(idx.0));
    }
    let s = s.map(|v| v as u32);
    const PERMS: [([usize; 3], i64); 6] =
        [([0, 1, 2], 1), ([1, 0, 2], -1), ([0, 2, 1], -1), ([2, 1, 0], -1), ([1, 2, 0], 1), ([2, 0, 1], 1)];
    let num = SymPoly3::from_terms(PERMS.iter().map(|(p, sign)| ([s[p[0]], s[p[1]], s[p[2]]], *sign)));
    vandermonde_quotient(&num)
}

/// Memoized Schur polynomials for repeated use inside one computation.
#[derive(Default)]
struct SchurCache(HashMap<GLIndex, SymPoly3>);

impl SchurCache {
    fn get(&mut self, idx: GLIndex) -> Result<&SymPoly3> {
        match self.0.entry(idx) {
            Entry::Occupied(e) => Ok(e.into_mut()),
            Entry::Vacant(e) => Ok(e.insert(schur(idx)?)),
        }
    }
}

/// Greedy Schur expansion of a symmetric polynomial.
///
/// The lex-largest surviving monomial of a symmetric polynomial is weakly
/// decreasing and is the leading monomial of exactly one Schur polynomial,
/// so peeling it off strictly lowers the leading monomial each round.
pub fn decompose_schur(f: &SymPoly3) -> Result<SchurExpansion> {
    if !f.is_symmetric() {
        return Err(Schur3Error::NotSymmetric);
    }
    let mut cache = SchurCache::default();
    let mut rest = f.clone();
    let mut out = SchurExpansion::new();
    let mut previous: Option<Exponent3> = None;
    while let Some((lead, c)) = rest.leading() {
        if previous.is_some_and(|p| lead >= p) || !(lead[0] >= lead[1] && lead[1] >= lead[2]) {
            return Err(Schur3Error::Internal("Schur peeling did not decrease the leading monomial"));
        }
        previous = Some(lead);
        let c = c.clone();
        let idx = GLIndex::from(lead);
        let s = cache.get(idx)?;
        rest = &rest - &s.scalar_mul(&c);
        out.insert(idx, c);
    }
    Ok(out)
}

/// `Σ c_λ s_λ`.
pub fn reconstruct(expansion: &SchurExpansion) -> Result<SymPoly3> {
    let mut out = SymPoly3::zero();
    for (idx, c) in expansion {
        out = &out + &schur(*idx)?.scalar_mul(c);
    }
    Ok(out)
}

/// Character-level Adams operation `xi -> xi^a`.
pub fn adams(f: &SymPoly3, a: u32) -> SymPoly3 {
    SymPoly3 { terms: f.terms.iter().map(|(e, c)| (e.map(|v| v * a), c.clone())).collect() }
}

/// Collapses a GL3 Schur expansion to sl3 weights, `s_λ -> V_{λ1-λ2, λ2-λ3}`.
pub fn to_sl3(expansion: &SchurExpansion) -> Result<SignedWeightSum> {
    let mut out = SignedWeightSum::new();
    for (idx, c) in expansion {
        let c = c.to_i64().ok_or(Schur3Error::Internal("multiplicity exceeds i64"))?;
        out.add(idx.sl3_weight(), c);
    }
    Ok(out)
}

/// The sl3 character `s_{m1+m2, m2}` of `V_{m1,m2}`.
pub fn character(w: Weight) -> Result<SymPoly3> {
    schur(GLIndex::two_row(i64::from(w.m1 + w.m2), i64::from(w.m2)))
}

/// `ψ_a(V_w)` by brute force: substitute, decompose, read off sl3 weights.
pub fn psi_oracle(w: Weight, a: u32) -> Result<SignedWeightSum> {
    if a == 0 {
        return Err(Schur3Error::Domain("Adams degree must be positive".into()));
    }
    to_sl3(&decompose_schur(&adams(&character(w)?, a))?)
}

fn sl3_expand(f: &SymPoly3) -> Result<SignedWeightSum> {
    to_sl3(&decompose_schur(f)?)
}

/// `Σ c · s_{a,b}` over two-index terms, straightened through the bialternant.
fn two_row_sum(terms: &[(i64, i64, i64)]) -> Result<SymPoly3> {
    let mut out = SymPoly3::zero();
    for &(a, b, c) in terms {
        out = &out + &schur(GLIndex::two_row(a, b))?.scalar_mul(&BigInt::from(c));
    }
    Ok(out)
}

/// Which row of the case-split product rules applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LrCase {
    SecondZero,
    SecondOne,
    Equal,
    Generic,
}

impl LrCase {
    /// Rows are tried in the order m2 = 0, m2 = 1, m1 = m2, generic.
    pub fn classify(m1: i64, m2: i64) -> LrCase {
        match () {
            _ if m2 == 0 => LrCase::SecondZero,
            _ if m2 == 1 => LrCase::SecondOne,
            _ if m1 == m2 => LrCase::Equal,
            _ => LrCase::Generic,
        }
    }
}

/// Right-hand sides of `s_{m1,m2}·s_2`, `s_{m1,m2}·s_{1,1}` and
/// `s_{m1,m2}·(s_2 - s_{1,1})` for the given case row, as `(a, b, sign)`.
pub fn lr_rows(m1: i64, m2: i64, case: LrCase) -> [Vec<(i64, i64, i64)>; 3] {
    match case {
        LrCase::SecondZero => [
            vec![(m1 + 2, 0, 1), (m1 + 1, 1, 1), (m1, 2, 1)],
            vec![(m1 + 1, 1, 1), (m1 - 1, 0, 1)],
            vec![(m1 + 2, 0, 1), (m1, 2, 1), (m1 - 1, 0, -1)],
        ],
        LrCase::SecondOne => [
            vec![(m1 + 2, 1, 1), (m1 + 1, 2, 1), (m1, 0, 1), (m1, 3, 1), (m1 - 1, 1, 1)],
            vec![(m1 + 1, 2, 1), (m1, 0, 1), (m1 - 1, 1, 1)],
            vec![(m1 + 2, 1, 1), (m1, 3, 1)],
        ],
        LrCase::Equal => [
            vec![(m1 + 2, m2, 1), (m1, m2 - 1, 1), (m1 - 2, m2 - 2, 1)],
            vec![(m1 + 1, m2 + 1, 1), (m1, m2 - 1, 1)],
            vec![(m1 + 2, m2, 1), (m1 - 2, m2 - 2, 1), (m1 + 1, m2 + 1, -1)],
        ],
        LrCase::Generic => [
            vec![
                (m1 + 2, m2, 1),
                (m1 + 1, m2 + 1, 1),
                (m1, m2 - 1, 1),
                (m1, m2 + 2, 1),
                (m1 - 1, m2, 1),
                (m1 - 2, m2 - 2, 1),
            ],
            vec![(m1 + 1, m2 + 1, 1), (m1, m2 - 1, 1), (m1 - 1, m2, 1)],
            vec![(m1 + 2, m2, 1), (m1, m2 + 2, 1), (m1 - 2, m2 - 2, 1)],
        ],
    }
}

/// Checks the given case row of the product rules at `(m1, m2)`, comparing sl3 expansions.
pub fn check_lr_row(m1: i64, m2: i64, case: LrCase) -> Result<bool> {
    let base = schur(GLIndex::two_row(m1, m2))?;
    let s2 = schur(GLIndex::two_row(2, 0))?;
    let s11 = schur(GLIndex::two_row(1, 1))?;
    let lhs = [&base * &s2, &base * &s11, &base * &(&s2 - &s11)];
    let rows = lr_rows(m1, m2, case);
    for (l, row) in lhs.iter().zip(rows.iter()) {
        if sl3_expand(l)? != sl3_expand(&two_row_sum(row)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks the sl3 product rules for `s_{m1,m2}` against brute-force expansion.
///
/// Covers `s_m·s_1` (one-row, `m = m1`), the two-row Pieri rule
/// `s_{m1,m2}·s_1 = s_{m1+1,m2} + s_{m1,m2+1} + s_{m1-1,m2-1}`, and the
/// applicable case row for `s_2`, `s_{1,1}` and `s_2 - s_{1,1}`.
pub fn verify_lemma_lr(m1: i64, m2: i64) -> Result<bool> {
    if m2 < 0 || m1 < m2 {
        return Err(Schur3Error::Domain(format!("({m1},{m2}) is not a two-row partition")));
    }
    let s1 = schur(GLIndex::two_row(1, 0))?;
    let one_row = &schur(GLIndex::two_row(m1, 0))? * &s1;
    if sl3_expand(&one_row)? != sl3_expand(&two_row_sum(&[(m1 + 1, 0, 1), (m1, 1, 1)])?)? {
        return Ok(false);
    }
    let pieri = &schur(GLIndex::two_row(m1, m2))? * &s1;
    let pieri_rhs = two_row_sum(&[(m1 + 1, m2, 1), (m1, m2 + 1, 1), (m1 - 1, m2 - 1, 1)])?;
    if sl3_expand(&pieri)? != sl3_expand(&pieri_rhs)? {
        return Ok(false);
    }
    check_lr_row(m1, m2, LrCase::classify(m1, m2))
}

fn psi2_char(m1: i64, m2: i64) -> Result<SymPoly3> {
    Ok(adams(&schur(GLIndex::two_row(m1, m2))?, 2))
}

/// `ψ2(s_{m1,m2+1}) = ψ2(s_{m1,m2})(s_2 - s_{1,1}) - ψ2(s_{m1+1,m2}) - ψ2(s_{m1-1,m2-1})`
/// in sl3, with the last term dropped when `m2 = 0`.
pub fn verify_lemma_psi2_recurrence(m1: i64, m2: i64) -> Result<bool> {
    if m2 < 0 || m1 < m2 + 1 {
        return Err(Schur3Error::Domain(format!("recurrence needs m1 >= m2 + 1 >= 1, got ({m1},{m2})")));
    }
    let psi_s1 = &schur(GLIndex::two_row(2, 0))? - &schur(GLIndex::two_row(1, 1))?;
    let lhs = psi2_char(m1, m2 + 1)?;
    let mut rhs = &(&psi2_char(m1, m2)? * &psi_s1) - &psi2_char(m1 + 1, m2)?;
    if m2 >= 1 {
        rhs = &rhs - &psi2_char(m1 - 1, m2 - 1)?;
    }
    Ok(sl3_expand(&lhs)? == sl3_expand(&rhs)?)
}
