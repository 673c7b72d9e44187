//! sl3 colored Jones polynomials of torus knots.
//!
//! [`jones_t2b`] is the closed form for `T(2,b)`, built on [`psi2_closed`].
//! [`jones_rosso`] handles any coprime `(a, b)` by feeding the brute-force
//! Adams operation from [`crate::schur3`] into the Jones–Rosso sum, so the
//! two routes share only the quantum dimension and twist primitives.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::{LaurentError, LaurentJson, ScaledLaurent, TermAccumulator};
use crate::plethysm2::{psi2_closed, SignedWeightSum};
use crate::schur3::{psi_oracle, Schur3Error};
use crate::sl3rep::{qdim_closed, twist_exponent, Weight, BASE_SCALE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JonesError {
    #[error("T(2,b) formula needs odd b >= 1, got b = {0}")]
    EvenStrands(u32),
    #[error("torus knot parameters must be positive, got ({a},{b})")]
    NonPositive { a: u32, b: u32 },
    #[error("T({a},{b}) is not a knot: gcd(a, b) != 1")]
    NotCoprime { a: u32, b: u32 },
    #[error("internal consistency failure: {0}")]
    Laurent(#[from] LaurentError),
    #[error("plethysm oracle failed: {0}")]
    Oracle(#[from] Schur3Error),
}

/// Coprime torus knot parameters `T(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TorusKnotSpec {
    a: u32,
    b: u32,
}

impl TorusKnotSpec {
    pub fn new(a: u32, b: u32) -> Result<Self, JonesError> {
        if a == 0 || b == 0 {
            return Err(JonesError::NonPositive { a, b });
        }
        if a.gcd(&b) != 1 {
            return Err(JonesError::NotCoprime { a, b });
        }
        Ok(TorusKnotSpec { a, b })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }
}

impl fmt::Display for TorusKnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.a, self.b)
    }
}

/// The variable a polynomial is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variable {
    #[serde(rename = "q")]
    Q,
    #[serde(rename = "qinv")]
    QInverse,
}

impl Variable {
    pub fn as_str(self) -> &'static str {
        match self {
            Variable::Q => "q",
            Variable::QInverse => "qinv",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredJonesResult {
    pub value: ScaledLaurent,
    pub knot: TorusKnotSpec,
    pub color: Weight,
    pub variable: Variable,
}

impl ColoredJonesResult {
    /// Re-expresses the value in `variable`, mirroring if needed.
    pub fn in_variable(&self, variable: Variable) -> Self {
        let value = if variable == self.variable { self.value.clone() } else { self.value.mirror() };
        ColoredJonesResult { value, variable, ..self.clone() }
    }

    pub fn to_json(&self) -> JonesJson {
        let LaurentJson { scale, terms } = self.value.to_json();
        JonesJson {
            knot: KnotJson { a: self.knot.a, b: self.knot.b },
            color: [self.color.m1, self.color.m2],
            variable: self.variable,
            scale,
            terms,
        }
    }

    pub fn from_json(json: &JonesJson) -> Result<Self, JonesError> {
        let value = ScaledLaurent::from_json(&LaurentJson { scale: json.scale, terms: json.terms.clone() })?;
        Ok(ColoredJonesResult {
            value,
            knot: TorusKnotSpec::new(json.knot.a, json.knot.b)?,
            color: Weight::new(json.color[0], json.color[1]),
            variable: json.variable,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotJson {
    pub a: u32,
    pub b: u32,
}

/// `{"knot":{"a":2,"b":3},"color":[5,7],"variable":"qinv","scale":1,"terms":[[24,"1"],...]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JonesJson {
    pub knot: KnotJson,
    pub color: [u32; 2],
    pub variable: Variable,
    pub scale: u32,
    pub terms: Vec<(i64, String)>,
}

/// `θ_λ^{-ab} / d_λ · Σ_μ c_μ d_μ θ_μ^{b/a}` at scale `6a`, reduced to integer exponents.
fn twisted_sum(
    knot: TorusKnotSpec,
    color: Weight,
    plethysm: &SignedWeightSum,
) -> Result<ColoredJonesResult, JonesError> {
    let (a, b) = (i64::from(knot.a), i64::from(knot.b));
    let scale = BASE_SCALE * knot.a;
    let mut numerator = TermAccumulator::new(scale);
    for (mu, c) in plethysm.iter() {
        let d_mu = qdim_closed(mu)?.rescale(scale)?;
        numerator.add_shifted(&d_mu, twist_exponent(mu, b, a, scale)?, c)?;
    }
    let d_lambda = qdim_closed(color)?.rescale(scale)?;
    let value = numerator
        .finish()
        .div_exact(&d_lambda)?
        .shift(twist_exponent(color, -a * b, 1, scale)?)
        .as_integer_laurent()?;
    Ok(ColoredJonesResult { value, knot, color, variable: Variable::Q })
}

/// `J_{T(2,b), w}(q)` for odd `b`, from the closed-form second plethysm.
pub fn jones_t2b(b: u32, w: Weight) -> Result<ColoredJonesResult, JonesError> {
    if b.is_multiple_of(2) {
        return Err(JonesError::EvenStrands(b));
    }
    twisted_sum(TorusKnotSpec::new(2, b)?, w, &psi2_closed(w))
}

/// `J_{T(a,b), w}(q)` with `ψ_a` from the symmetric-function oracle.
///
/// Cost grows quickly with `a` and the weight; intended for `a <= 4` and
/// small colors.
pub fn jones_rosso(knot: TorusKnotSpec, w: Weight) -> Result<ColoredJonesResult, JonesError> {
    twisted_sum(knot, w, &psi_oracle(w, knot.a)?)
}

/// Extremal exponents and coefficients of a nonzero polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeReport {
    #[serde(with = "ratio_string")]
    pub min_deg: Ratio<i64>,
    #[serde(with = "ratio_string")]
    pub max_deg: Ratio<i64>,
    #[serde(with = "bigint_string")]
    pub min_coeff: BigInt,
    #[serde(with = "ratio_list")]
    pub min_coeff_at: Vec<Ratio<i64>>,
    #[serde(with = "bigint_string")]
    pub max_coeff: BigInt,
    #[serde(with = "ratio_list")]
    pub max_coeff_at: Vec<Ratio<i64>>,
    #[serde(with = "bigint_string")]
    pub leading: BigInt,
    #[serde(with = "bigint_string")]
    pub trailing: BigInt,
    pub term_count: usize,
}

impl DegreeReport {
    pub fn of(value: &ScaledLaurent) -> Result<Self, LaurentError> {
        let (min_deg, max_deg) = value.degree_span()?;
        let terms = value.terms();
        let scale = i64::from(value.scale());
        let min_coeff = terms.iter().map(|(_, c)| c).min().cloned().unwrap_or_default();
        let max_coeff = terms.iter().map(|(_, c)| c).max().cloned().unwrap_or_default();
        let at = |target: &BigInt| -> Vec<Ratio<i64>> {
            terms.iter().filter(|(_, c)| c == target).map(|(e, _)| Ratio::new(*e, scale)).collect()
        };
        Ok(DegreeReport {
            min_deg,
            max_deg,
            min_coeff_at: at(&min_coeff),
            max_coeff_at: at(&max_coeff),
            min_coeff,
            max_coeff,
            leading: terms[terms.len() - 1].1.clone(),
            trailing: terms[0].1.clone(),
            term_count: terms.len(),
        })
    }
}

impl fmt::Display for DegreeReport {
    /// `(min_deg, max_deg, min_coeff, max_coeff, leading, trailing)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}, {}, {})",
            self.min_deg, self.max_deg, self.min_coeff, self.max_coeff, self.leading, self.trailing
        )
    }
}

pub fn degree_report(r: &ColoredJonesResult) -> Result<DegreeReport, JonesError> {
    Ok(DegreeReport::of(&r.value)?)
}

mod ratio_string {
    use num_rational::Ratio;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio<i64>, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

mod ratio_list {
    use num_rational::Ratio;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Ratio<i64>], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|r| r.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Ratio<i64>>, D::Error> {
        Vec::<String>::deserialize(d)?.iter().map(|x| x.parse().map_err(D::Error::custom)).collect()
    }
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(c: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&c.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn knot(a: u32, b: u32) -> TorusKnotSpec {
        TorusKnotSpec::new(a, b).unwrap()
    }

    #[test]
    fn knot_spec_validation() {
        assert_eq!(TorusKnotSpec::new(2, 4).unwrap_err(), JonesError::NotCoprime { a: 2, b: 4 });
        assert_eq!(TorusKnotSpec::new(0, 3).unwrap_err(), JonesError::NonPositive { a: 0, b: 3 });
        assert_eq!(knot(3, 2).to_string(), "T(3,2)");
        assert_eq!(jones_t2b(4, Weight::zero()).unwrap_err(), JonesError::EvenStrands(4));
    }

    #[test]
    fn unknot_and_trivial_color() {
        for (m1, m2) in [(0, 0), (1, 0), (2, 1), (5, 7)] {
            let r = jones_t2b(1, Weight::new(m1, m2)).unwrap();
            assert!(r.value.is_one(), "({m1},{m2}): {}", r.value);
            assert_eq!(r.value.scale(), 1);
        }
        assert!(jones_t2b(3, Weight::zero()).unwrap().value.is_one());
        assert!(jones_rosso(knot(2, 1), Weight::new(2, 2)).unwrap().value.is_one());
        assert!(jones_rosso(knot(1, 5), Weight::new(1, 2)).unwrap().value.is_one());
    }

    #[test]
    fn fundamental_trefoil() {
        // HOMFLY 2a^2 - a^4 + a^2 z^2 at a = q^(3/2), z = q^(1/2) - q^(-1/2)
        let r = jones_t2b(3, Weight::new(1, 0)).unwrap().in_variable(Variable::QInverse);
        assert_eq!(r.value, ScaledLaurent::from_terms(1, [(2, 1), (4, 1), (6, -1)]));
        assert_eq!(r.in_variable(Variable::Q).value, jones_t2b(3, Weight::new(1, 0)).unwrap().value);
    }

    #[test]
    fn cross_formula_small() {
        let w = Weight::new(1, 1);
        assert_eq!(jones_rosso(knot(2, 3), w).unwrap().value, jones_t2b(3, w).unwrap().value);
        let w = Weight::new(1, 0);
        assert_eq!(jones_rosso(knot(3, 2), w).unwrap().value, jones_rosso(knot(2, 3), w).unwrap().value);
    }

    #[test]
    fn degree_report_of_constant() {
        let r = jones_t2b(1, Weight::new(3, 3)).unwrap();
        let rep = degree_report(&r).unwrap();
        assert_eq!(rep.to_string(), "(0, 0, 1, 1, 1, 1)");
        assert_eq!(rep.min_coeff_at, vec![Ratio::from(0)]);
        let zero = ColoredJonesResult { value: ScaledLaurent::zero(1), ..r };
        assert!(degree_report(&zero).is_err());
    }

    #[test]
    fn json_round_trip() {
        let r = jones_t2b(3, Weight::new(2, 1)).unwrap().in_variable(Variable::QInverse);
        let text = serde_json::to_string(&r.to_json()).unwrap();
        assert!(text.starts_with(r#"{"knot":{"a":2,"b":3},"color":[2,1],"variable":"qinv","scale":1,"terms":[["#));
        let back: JonesJson = serde_json::from_str(&text).unwrap();
        assert_eq!(ColoredJonesResult::from_json(&back).unwrap(), r);
        let rep = degree_report(&r).unwrap();
        let rep_text = serde_json::to_string(&rep).unwrap();
        assert_eq!(serde_json::from_str::<DegreeReport>(&rep_text).unwrap(), rep);
    }
}
