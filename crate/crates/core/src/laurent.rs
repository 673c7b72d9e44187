//! Sparse exact Laurent polynomials in a fractional power of `q`.
//!
//! A [`ScaledLaurent`] with scale `D` lives in `Z[q^(±1/D)]`. Exponents are
//! stored pre-multiplied by `D`, so the term `(e, c)` means `c * q^(e/D)` and
//! every operation is integer-only. Coefficients are unbounded.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest dense buffer (in slots) the multiplication and division kernels
/// will allocate before switching to a map-based path.
const DENSE_LIMIT: usize = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("scale mismatch: {left} vs {right}")]
    ScaleMismatch { left: u32, right: u32 },
    #[error("scale must be a positive integer")]
    ZeroScale,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("inexact division: nonzero remainder")]
    InexactDivision,
    #[error("degree of the zero polynomial is undefined")]
    UndefinedDegree,
    #[error("exponent {exponent}/{from} is not representable at scale {to}")]
    NotRepresentable { exponent: i64, from: u32, to: u32 },
    #[error("fractional exponent {exponent}/{scale} in an integral Laurent polynomial")]
    NonIntegral { exponent: i64, scale: u32 },
    #[error("malformed polynomial: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, LaurentError>;

/// Element of `Z[q^(±1/D)]`, stored as ascending `(scaled exponent, coefficient)` pairs.
///
/// Invariants: `scale > 0`, exponents strictly ascending, no zero coefficient.
/// The zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScaledLaurent {
    scale: u32,
    terms: Vec<(i64, BigInt)>,
}

impl ScaledLaurent {
    pub fn zero(scale: u32) -> Self {
        assert!(scale > 0, "scale must be positive");
        ScaledLaurent { scale, terms: Vec::new() }
    }

    pub fn one(scale: u32) -> Self {
        Self::monomial(scale, 0, BigInt::one())
    }

    /// `coeff * q^(exponent/scale)`.
    pub fn monomial(scale: u32, exponent: i64, coeff: impl Into<BigInt>) -> Self {
        assert!(scale > 0, "scale must be positive");
        let coeff = coeff.into();
        let terms = if coeff.is_zero() { Vec::new() } else { vec![(exponent, coeff)] };
        ScaledLaurent { scale, terms }
    }

    /// Builds a polynomial from arbitrary `(scaled exponent, coefficient)` pairs,
    /// summing repeated exponents and dropping zeros.
    pub fn from_terms<C: Into<BigInt>>(scale: u32, terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        assert!(scale > 0, "scale must be positive");
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_default() += c.into();
        }
        Self::from_sorted_unchecked(scale, map.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    fn from_sorted_unchecked(scale: u32, terms: Vec<(i64, BigInt)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        ScaledLaurent { scale, terms }
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    /// Terms in strictly ascending scaled-exponent order.
    pub fn terms(&self) -> &[(i64, BigInt)] {
        &self.terms
    }

    /// Number of nonzero terms; [`Self::is_zero`] is the emptiness test.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Coefficient of `q^(exponent/scale)`.
    pub fn coeff(&self, exponent: i64) -> BigInt {
        match self.terms.binary_search_by_key(&exponent, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    fn check_scale(&self, other: &Self) -> Result<()> {
        if self.scale != other.scale {
            return Err(LaurentError::ScaleMismatch { left: self.scale, right: other.scale });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_scale(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_scale(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let fix = |c: &BigInt| if negate_other { -c } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &other.terms[j];
            match ea.cmp(eb) {
                std::cmp::Ordering::Less => {
                    out.push((*ea, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*eb, fix(cb)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        out.push((*ea, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(e, c)| (*e, fix(c))));
        Self::from_sorted_unchecked(self.scale, out)
    }

    pub fn negate(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (*e, -c)).collect();
        Self::from_sorted_unchecked(self.scale, terms)
    }

    pub fn scalar_mul(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero(self.scale);
        }
        let terms = self.terms.iter().map(|(e, x)| (*e, x * &c)).collect();
        Self::from_sorted_unchecked(self.scale, terms)
    }

    /// Multiplies by the monomial `q^(shift/scale)`.
    pub fn shift(&self, shift: i64) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect();
        Self::from_sorted_unchecked(self.scale, terms)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_scale(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.scale));
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return Ok(self.shift(*e).scalar_mul(c.clone()));
        }
        if self.terms.len() == 1 {
            return other.checked_mul(self);
        }
        let (lo, hi) = (self.min_exp() + other.min_exp(), self.max_exp() + other.max_exp());
        let stride = self.stride().gcd(&other.stride());
        let slots = ((hi - lo) / stride) as usize + 1;
        if slots > DENSE_LIMIT {
            let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
            for (ea, ca) in &self.terms {
                for (eb, cb) in &other.terms {
                    *map.entry(ea + eb).or_default() += ca * cb;
                }
            }
            let terms = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            return Ok(Self::from_sorted_unchecked(self.scale, terms));
        }
        if let Some(out) = mul_dense_i128(self, other, lo, stride, slots) {
            return Ok(out);
        }
        let mut acc = vec![BigInt::zero(); slots];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                acc[((ea + eb - lo) / stride) as usize] += ca * cb;
            }
        }
        Ok(Self::from_dense(self.scale, lo, stride, acc))
    }

    /// Exact division; errors if the divisor leaves a remainder.
    ///
    /// Long division from the lowest exponent upward.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        self.check_scale(divisor)?;
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.scale));
        }
        if divisor.terms.len() == 1 {
            let (e, c) = &divisor.terms[0];
            let mut terms = Vec::with_capacity(self.terms.len());
            for (ef, cf) in &self.terms {
                let (q, r) = cf.div_rem(c);
                if !r.is_zero() {
                    return Err(LaurentError::InexactDivision);
                }
                terms.push((ef - e, q));
            }
            return Ok(Self::from_sorted_unchecked(self.scale, terms));
        }
        let q_lo = self.min_exp() - divisor.min_exp();
        let q_hi = self.max_exp() - divisor.max_exp();
        if q_hi < q_lo {
            return Err(LaurentError::InexactDivision);
        }
        let stride = self.stride().gcd(&divisor.stride());
        let slots = ((self.max_exp() - self.min_exp()) / stride) as usize + 1;
        if slots > DENSE_LIMIT {
            return self.div_exact_sparse(divisor);
        }
        let q_slots = ((q_hi - q_lo) / stride) as usize + 1;
        let g_min = divisor.min_exp();
        let g_idx: Vec<usize> = divisor.terms.iter().map(|(e, _)| ((e - g_min) / stride) as usize).collect();
        if let Some(q) = div_dense_i128(self, divisor, &g_idx, stride, slots, q_slots) {
            return q.map(|v| Self::from_dense(self.scale, q_lo, stride, v));
        }
        let mut rem = self.to_dense(stride, slots);
        let lead = &divisor.terms[0].1;
        let mut quot = vec![BigInt::zero(); q_slots];
        for i in 0..q_slots {
            if rem[i].is_zero() {
                continue;
            }
            let (q, r) = rem[i].div_rem(lead);
            if !r.is_zero() {
                return Err(LaurentError::InexactDivision);
            }
            for (k, (_, gc)) in divisor.terms.iter().enumerate() {
                rem[i + g_idx[k]] -= &q * gc;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(LaurentError::InexactDivision);
        }
        Ok(Self::from_dense(self.scale, q_lo, stride, quot))
    }

    fn div_exact_sparse(&self, divisor: &Self) -> Result<Self> {
        let mut rem: BTreeMap<i64, BigInt> = self.terms.iter().cloned().collect();
        let (g_min, lead) = (divisor.min_exp(), &divisor.terms[0].1);
        let q_hi = self.max_exp() - divisor.max_exp();
        let mut quot = Vec::new();
        while let Some((&e, c)) = rem.iter().next() {
            let t = e - g_min;
            if t > q_hi {
                return Err(LaurentError::InexactDivision);
            }
            let (q, r) = c.div_rem(lead);
            if !r.is_zero() {
                return Err(LaurentError::InexactDivision);
            }
            for (ge, gc) in &divisor.terms {
                let slot = rem.entry(t + ge).or_default();
                *slot -= &q * gc;
                if slot.is_zero() {
                    rem.remove(&(t + ge));
                }
            }
            quot.push((t, q));
        }
        Ok(Self::from_sorted_unchecked(self.scale, quot))
    }

    /// Substitutes `q -> 1/q`.
    pub fn mirror(&self) -> Self {
        let terms = self.terms.iter().rev().map(|(e, c)| (-e, c.clone())).collect();
        Self::from_sorted_unchecked(self.scale, terms)
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    /// Lowest and highest exponent as reduced rationals.
    pub fn degree_span(&self) -> Result<(Ratio<i64>, Ratio<i64>)> {
        if self.is_zero() {
            return Err(LaurentError::UndefinedDegree);
        }
        let d = i64::from(self.scale);
        Ok((Ratio::new(self.min_exp(), d), Ratio::new(self.max_exp(), d)))
    }

    /// Re-expresses the polynomial at another scale.
    pub fn rescale(&self, new_scale: u32) -> Result<Self> {
        if new_scale == 0 {
            return Err(LaurentError::ZeroScale);
        }
        if new_scale == self.scale {
            return Ok(self.clone());
        }
        let (from, to) = (i64::from(self.scale), i64::from(new_scale));
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let num = e * to;
            if num % from != 0 {
                return Err(LaurentError::NotRepresentable { exponent: *e, from: self.scale, to: new_scale });
            }
            terms.push((num / from, c.clone()));
        }
        Ok(Self::from_sorted_unchecked(new_scale, terms))
    }

    /// The same polynomial at scale 1; fails if any exponent is fractional.
    pub fn as_integer_laurent(&self) -> Result<Self> {
        self.rescale(1).map_err(|e| match e {
            LaurentError::NotRepresentable { exponent, from, .. } => {
                LaurentError::NonIntegral { exponent, scale: from }
            }
            other => other,
        })
    }

    /// Multiplies by the quantum integer `[n]`.
    ///
    /// Runs in time linear in the output span (sliding window over the
    /// geometric sum), which is what keeps large quantum dimensions cheap.
    pub fn mul_quantum_integer(&self, n: u32) -> Result<Self> {
        if n == 0 || self.is_zero() {
            return Ok(Self::zero(self.scale));
        }
        let d = i64::from(self.scale);
        let width = i64::from(n - 1) * d;
        if width % 2 != 0 {
            return Err(LaurentError::NotRepresentable { exponent: width / 2, from: 2, to: self.scale });
        }
        let stride = self.stride().gcd(&d);
        let step = (d / stride) as usize;
        let lo = self.min_exp() - width / 2;
        let slots = ((self.max_exp() - self.min_exp() + width) / stride) as usize + 1;
        let src = self.to_dense(stride, slots);
        let n = n as usize;
        let mut out: Vec<BigInt> = Vec::with_capacity(slots);
        for i in 0..slots {
            let mut v = src[i].clone();
            if i >= step {
                v += &out[i - step];
            }
            if i >= n * step {
                v -= &src[i - n * step];
            }
            out.push(v);
        }
        Ok(Self::from_dense(self.scale, lo, stride, out))
    }

    fn min_exp(&self) -> i64 {
        self.terms[0].0
    }

    fn max_exp(&self) -> i64 {
        self.terms[self.terms.len() - 1].0
    }

    /// gcd of all exponent offsets from the minimum; 0 for a monomial.
    fn stride(&self) -> i64 {
        let base = self.terms.first().map_or(0, |t| t.0);
        self.terms.iter().fold(0i64, |g, (e, _)| g.gcd(&(e - base)))
    }

    fn to_dense(&self, stride: i64, slots: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); slots];
        let base = self.min_exp();
        for (e, c) in &self.terms {
            v[((e - base) / stride) as usize] = c.clone();
        }
        v
    }

    fn from_dense(scale: u32, lo: i64, stride: i64, dense: Vec<BigInt>) -> Self {
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (lo + i as i64 * stride, c))
            .collect();
        Self::from_sorted_unchecked(scale, terms)
    }

    pub fn to_json(&self) -> LaurentJson {
        LaurentJson { scale: self.scale, terms: self.terms.iter().map(|(e, c)| (*e, c.to_string())).collect() }
    }

    pub fn from_json(json: &LaurentJson) -> Result<Self> {
        if json.scale == 0 {
            return Err(LaurentError::ZeroScale);
        }
        let mut terms = Vec::with_capacity(json.terms.len());
        for (e, c) in &json.terms {
            let c: BigInt = c.parse().map_err(|_| LaurentError::Parse(format!("bad coefficient {c:?}")))?;
            if c.is_zero() {
                return Err(LaurentError::Parse(format!("zero coefficient at exponent {e}")));
            }
            if let Some((prev, _)) = terms.last() {
                if *prev >= *e {
                    return Err(LaurentError::Parse("exponents must be strictly ascending".into()));
                }
            }
            terms.push((*e, c));
        }
        Ok(Self::from_sorted_unchecked(json.scale, terms))
    }

    /// Parses the text form produced by `Display` into a polynomial at `scale`.
    pub fn parse_text(text: &str, scale: u32) -> Result<Self> {
        if scale == 0 {
            return Err(LaurentError::ZeroScale);
        }
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(Self::zero(scale));
        }
        let bad = |msg: &str| LaurentError::Parse(format!("{msg} in {text:?}"));
        let mut pieces = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        let mut depth = 0;
        for (i, &b) in bytes.iter().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'+' | b'-' if i > start && depth == 0 && bytes[i - 1] != b'^' => {
                    pieces.push(&s[start..i]);
                    start = i;
                }
                _ => {}
            }
        }
        pieces.push(&s[start..]);
        let mut terms = Vec::with_capacity(pieces.len());
        for piece in pieces {
            let piece = piece.strip_prefix('+').unwrap_or(piece);
            let (coeff, exp) = piece.split_once("*q^").ok_or_else(|| bad("expected c*q^e"))?;
            let coeff: BigInt = coeff.parse().map_err(|_| bad("bad coefficient"))?;
            let exp = exp.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(exp);
            let (num, den) = match exp.split_once('/') {
                Some((n, d)) => (n.parse::<i64>(), d.parse::<i64>()),
                None => (exp.parse::<i64>(), Ok(1)),
            };
            let (num, den) = (num.map_err(|_| bad("bad exponent"))?, den.map_err(|_| bad("bad exponent"))?);
            if den <= 0 || (num * i64::from(scale)) % den != 0 {
                return Err(LaurentError::NotRepresentable { exponent: num, from: den.max(1) as u32, to: scale });
            }
            terms.push((num * i64::from(scale) / den, coeff));
        }
        Ok(Self::from_terms(scale, terms))
    }
}

/// Serialized form: `{"scale": D, "terms": [[e, "c"], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentJson {
    pub scale: u32,
    pub terms: Vec<(i64, String)>,
}

/// Formats a rational exponent: integers bare, fractions as `(p/s)`.
pub(crate) fn fmt_exponent(r: Ratio<i64>) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("({}/{})", r.numer(), r.denom())
    }
}

impl fmt::Display for ScaledLaurent {
    /// `c*q^e` terms in ascending exponent order, e.g. `1*q^24 + 1*q^30 - 1*q^35`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let d = i64::from(self.scale);
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let exp = fmt_exponent(Ratio::new(*e, d));
            if i == 0 {
                write!(f, "{c}*q^{exp}")?;
            } else if c.is_negative() {
                write!(f, " - {}*q^{exp}", c.abs())?;
            } else {
                write!(f, " + {c}*q^{exp}")?;
            }
        }
        Ok(())
    }
}

/// Dense accumulator for sums of shifted, scaled polynomials at a fixed scale.
///
/// Grows on demand; [`TermAccumulator::finish`] drops zero slots.
#[derive(Debug, Clone)]
pub struct TermAccumulator {
    scale: u32,
    lo: i64,
    slots: Vec<BigInt>,
}

impl TermAccumulator {
    pub fn new(scale: u32) -> Self {
        TermAccumulator { scale, lo: 0, slots: Vec::new() }
    }

    /// Preallocates for scaled exponents in `[lo, hi]`.
    pub fn with_range(scale: u32, lo: i64, hi: i64) -> Self {
        let n = if hi >= lo { (hi - lo) as usize + 1 } else { 0 };
        TermAccumulator { scale, lo, slots: vec![BigInt::zero(); n] }
    }

    fn reserve(&mut self, lo: i64, hi: i64) {
        if self.slots.is_empty() {
            self.lo = lo;
            self.slots = vec![BigInt::zero(); (hi - lo) as usize + 1];
            return;
        }
        if lo < self.lo {
            let extra = (self.lo - lo) as usize;
            let mut grown = vec![BigInt::zero(); extra];
            grown.append(&mut self.slots);
            self.slots = grown;
            self.lo = lo;
        }
        let top = self.lo + self.slots.len() as i64 - 1;
        if hi > top {
            self.slots.resize(self.slots.len() + (hi - top) as usize, BigInt::zero());
        }
    }

    /// Adds `factor * q^(shift/scale) * poly`.
    pub fn add_shifted(&mut self, poly: &ScaledLaurent, shift: i64, factor: i64) -> Result<()> {
        if poly.scale != self.scale {
            return Err(LaurentError::ScaleMismatch { left: self.scale, right: poly.scale });
        }
        if poly.is_zero() || factor == 0 {
            return Ok(());
        }
        self.reserve(poly.min_exp() + shift, poly.max_exp() + shift);
        let base = shift - self.lo;
        for (e, c) in &poly.terms {
            let slot = &mut self.slots[(e + base) as usize];
            match factor {
                1 => *slot += c,
                -1 => *slot -= c,
                k => *slot += c * k,
            }
        }
        Ok(())
    }

    pub fn finish(self) -> ScaledLaurent {
        ScaledLaurent::from_dense(self.scale, self.lo, 1, self.slots)
    }
}

fn small_coeffs(p: &ScaledLaurent) -> Option<(Vec<i128>, i128)> {
    let mut max = 0i128;
    let mut out = Vec::with_capacity(p.terms.len());
    for (_, c) in &p.terms {
        let v = c.to_i64()? as i128;
        max = max.max(v.abs());
        out.push(v);
    }
    Some((out, max))
}

fn mul_dense_i128(f: &ScaledLaurent, g: &ScaledLaurent, lo: i64, stride: i64, slots: usize) -> Option<ScaledLaurent> {
    let (fc, fmax) = small_coeffs(f)?;
    let (gc, gmax) = small_coeffs(g)?;
    let terms = f.terms.len().min(g.terms.len()) as i128;
    // Every accumulated slot is bounded by terms * fmax * gmax.
    fmax.checked_mul(gmax)?.checked_mul(terms)?;
    let mut acc = vec![0i128; slots];
    for ((ea, _), a) in f.terms.iter().zip(&fc) {
        let base = ea - lo;
        for ((eb, _), b) in g.terms.iter().zip(&gc) {
            acc[((base + eb) / stride) as usize] += a * b;
        }
    }
    let terms = acc
        .into_iter()
        .enumerate()
        .filter(|(_, c)| *c != 0)
        .map(|(i, c)| (lo + i as i64 * stride, BigInt::from(c)))
        .collect();
    Some(ScaledLaurent::from_sorted_unchecked(f.scale, terms))
}

/// Long division in `i128`; `None` means an intermediate overflowed and the
/// caller must redo the work with big integers.
fn div_dense_i128(
    f: &ScaledLaurent,
    g: &ScaledLaurent,
    g_idx: &[usize],
    stride: i64,
    slots: usize,
    q_slots: usize,
) -> Option<Result<Vec<BigInt>>> {
    let (gc, _) = small_coeffs(g)?;
    let mut rem = vec![0i128; slots];
    let base = f.min_exp();
    for (e, c) in &f.terms {
        rem[((e - base) / stride) as usize] = c.to_i64()? as i128;
    }
    let lead = gc[0];
    let mut quot = vec![BigInt::zero(); q_slots];
    for i in 0..q_slots {
        let r = rem[i];
        if r == 0 {
            continue;
        }
        if r % lead != 0 {
            return Some(Err(LaurentError::InexactDivision));
        }
        let q = r / lead;
        for (k, c) in gc.iter().enumerate() {
            let slot = &mut rem[i + g_idx[k]];
            *slot = slot.checked_sub(q.checked_mul(*c)?)?;
        }
        quot[i] = BigInt::from(q);
    }
    if rem.iter().any(|&c| c != 0) {
        return Some(Err(LaurentError::InexactDivision));
    }
    Some(Ok(quot))
}
