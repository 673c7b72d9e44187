//! Closed-form second Adams operation `ψ2(V_{m1,m2})` for sl3.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::sl3rep::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlethysmError {
    #[error("partition index ({m1},{m2}) requires m1 >= m2 >= 0")]
    Domain { m1: i64, m2: i64 },
    #[error("malformed weight sum: {0}")]
    Parse(String),
}

/// A virtual sl3 representation `Σ c_μ V_μ` with nonzero integer multiplicities.
///
/// Terms iterate in lexicographic `(m1, m2)` order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SignedWeightSum {
    terms: BTreeMap<Weight, i64>,
}

impl SignedWeightSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(w: Weight) -> Self {
        let mut s = Self::new();
        s.add(w, 1);
        s
    }

    /// Adds `c · V_w`, dropping the entry if it cancels.
    pub fn add(&mut self, w: Weight, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(w).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn get(&self, w: Weight) -> i64 {
        self.terms.get(&w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Weight, i64)> + '_ {
        self.terms.iter().map(|(w, c)| (*w, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Replaces every weight by its dual.
    pub fn dual(&self) -> Self {
        self.iter().map(|(w, c)| (w.dual(), c)).collect()
    }

    pub fn to_json(&self) -> WeightSumJson {
        WeightSumJson { terms: self.iter().map(|(w, c)| (w.m1, w.m2, c)).collect() }
    }

    pub fn from_json(json: &WeightSumJson) -> Result<Self, PlethysmError> {
        let mut out = Self::new();
        for &(m1, m2, c) in &json.terms {
            if c == 0 || out.terms.contains_key(&Weight::new(m1, m2)) {
                return Err(PlethysmError::Parse(format!("bad term V_{{{m1},{m2}}} with multiplicity {c}")));
            }
            out.add(Weight::new(m1, m2), c);
        }
        Ok(out)
    }
}

impl FromIterator<(Weight, i64)> for SignedWeightSum {
    fn from_iter<I: IntoIterator<Item = (Weight, i64)>>(iter: I) -> Self {
        let mut s = Self::new();
        for (w, c) in iter {
            s.add(w, c);
        }
        s
    }
}

/// `{"terms": [[m1, m2, c], ...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSumJson {
    pub terms: Vec<(u32, u32, i64)>,
}

impl fmt::Display for SignedWeightSum {
    /// `+V_{0,4} -V_{0,7} +2*V_{1,1}`; the empty sum prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(if c < 0 { "-" } else { "+" })?;
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "V_{{{},{}}}", w.m1, w.m2)?;
        }
        Ok(())
    }
}

impl FromStr for SignedWeightSum {
    type Err = PlethysmError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::new());
        }
        let bad = || PlethysmError::Parse(s.to_string());
        let mut out = Self::new();
        for tok in s.split_whitespace() {
            let (sign, rest) = match tok.as_bytes().first() {
                Some(b'+') => (1, &tok[1..]),
                Some(b'-') => (-1, &tok[1..]),
                _ => return Err(bad()),
            };
            let (mult, rest) = match rest.split_once('*') {
                Some((m, r)) => (m.parse::<i64>().map_err(|_| bad())?, r),
                None => (1, rest),
            };
            let inner = rest.strip_prefix("V_{").and_then(|r| r.strip_suffix('}')).ok_or_else(bad)?;
            let (a, b) = inner.split_once(',').ok_or_else(bad)?;
            let w = Weight::new(a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?);
            out.add(w, sign * mult);
        }
        Ok(out)
    }
}

/// `Σ c_μ · dim V_μ` with the classical dimension.
pub fn signed_dimension(s: &SignedWeightSum) -> i128 {
    s.iter().map(|(w, c)| i128::from(c) * i128::from(w.dimension())).sum()
}

fn dominant(m1: i64, m2: i64) -> Weight {
    assert!(m1 >= 0 && m2 >= 0, "summand ({m1},{m2}) is not dominant");
    Weight::new(m1 as u32, m2 as u32)
}

/// `ψ2(V_w)` from the three double sums over `l ≤ min(m1, m2)`.
pub fn psi2_closed(w: Weight) -> SignedWeightSum {
    let (m1, m2) = (i64::from(w.m1), i64::from(w.m2));
    let mut out = SignedWeightSum::new();
    for l in 0..=m1.min(m2) {
        for k in 0..=m1 - l {
            out.add(dominant(2 * m1 - 2 * k - 2 * l, 2 * m2 + k - 2 * l), sign(k));
        }
        for k in 0..=m2 - l {
            out.add(dominant(2 * m1 + k - 2 * l, 2 * m2 - 2 * k - 2 * l), sign(k));
        }
        out.add(dominant(2 * m1 - 2 * l, 2 * m2 - 2 * l), -1);
    }
    out
}

fn sign(k: i64) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `ψ2(s_{m1,m2})` in two-row partition coordinates, `m1 >= m2`, returned
/// as sl3 weights via `s_{a,b} -> V_{a-b,b}`.
pub fn psi2_schur_form(m1: i64, m2: i64) -> Result<SignedWeightSum, PlethysmError> {
    if m2 < 0 || m1 < m2 {
        return Err(PlethysmError::Domain { m1, m2 });
    }
    let top = (m1 - m2).min(m2);
    let mut partitions: Vec<((i64, i64), i64)> = Vec::new();
    for l in 0..=top {
        let mut parity = 1;
        for k in 0..=m1 - m2 - l {
            partitions.push(((2 * m1 - k - 4 * l, 2 * m2 + k - 2 * l), parity));
            parity = -parity;
        }
        parity = 1;
        for k in 0..=m2 - l {
            partitions.push(((2 * m1 - k - 4 * l, 2 * m2 - 2 * k - 2 * l), parity));
            parity = -parity;
        }
        partitions.push(((2 * m1 - 4 * l, 2 * m2 - 2 * l), -1));
    }
    let mut out = SignedWeightSum::new();
    for ((a, b), c) in partitions {
        if b < 0 || a < b {
            return Err(PlethysmError::Domain { m1: a, m2: b });
        }
        out.add(Weight::new((a - b) as u32, b as u32), c);
    }
    Ok(out)
}
