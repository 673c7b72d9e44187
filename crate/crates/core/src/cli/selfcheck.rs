//! Desk-scale consistency checks run by the `selfcheck` command.

use std::fmt;

use crate::jones::{jones_rosso, jones_t2b, TorusKnotSpec, Variable};
use crate::laurent::ScaledLaurent;
use crate::plethysm2::{psi2_closed, psi2_schur_form, signed_dimension};
use crate::schur3::{check_lr_row, psi_oracle, verify_lemma_lr, verify_lemma_psi2_recurrence, LrCase};
use crate::sl3rep::{qdim_closed, qdim_weyl, twist_weyl_check, Weight};

const GOLDEN_TREFOIL_5_7: &str = include_str!("../../tests/data/trefoil_5_7_qinv.txt");

/// Result of one property; `passed == None` marks an informational finding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: Option<bool>,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.passed {
            Some(true) => "PASS",
            Some(false) => "FAIL",
            None => "INFO",
        };
        write!(f, "{tag} {}", self.name)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

fn grid(max: u32) -> impl Iterator<Item = Weight> {
    (0..=max).flat_map(move |m1| (0..=max).map(move |m2| Weight::new(m1, m2)))
}

/// Runs `f` over `cases`, reporting the first failing case.
fn check<T: fmt::Debug>(
    name: &'static str,
    cases: impl IntoIterator<Item = T>,
    mut f: impl FnMut(&T) -> bool,
) -> CheckOutcome {
    let mut count = 0;
    for case in cases {
        count += 1;
        if !f(&case) {
            return CheckOutcome { name, passed: Some(false), detail: format!("fails at {case:?}") };
        }
    }
    CheckOutcome { name, passed: Some(true), detail: format!("{count} cases") }
}

pub(crate) fn golden_trefoil() -> ScaledLaurent {
    let terms = GOLDEN_TREFOIL_5_7.lines().filter(|l| !l.trim().is_empty()).map(|line| {
        let mut it = line.split_whitespace().map(|x| x.parse::<i64>().expect("fixture is integral"));
        (it.next().expect("exponent"), it.next().expect("coefficient"))
    });
    ScaledLaurent::from_terms(1, terms)
}

/// Smaller-range versions of the library's acceptance properties.
pub fn run_selfcheck() -> Vec<CheckOutcome> {
    let mut out = vec![
        check("qdim_weyl = qdim_closed, m1,m2 <= 12", grid(12), |&w| qdim_weyl(w).ok() == qdim_closed(w).ok()),
        check("twist from (λ, λ+2ρ), m1,m2 <= 12", grid(12), |&w| twist_weyl_check(w)),
        check("psi2_closed = psi_oracle(·, 2), m1,m2 <= 6", grid(6), |&w| {
            psi_oracle(w, 2).ok() == Some(psi2_closed(w))
        }),
        check(
            "psi2_schur_form = psi2_closed, m1 <= 12",
            (0..=12i64).flat_map(|m1| (0..=m1).map(move |m2| (m1, m2))),
            |&(m1, m2)| psi2_schur_form(m1, m2).ok() == Some(psi2_closed(Weight::new((m1 - m2) as u32, m2 as u32))),
        ),
        check("signed dimension of psi2_closed, m1,m2 <= 12", grid(12), |&w| {
            signed_dimension(&psi2_closed(w)) == i128::from(w.dimension())
        }),
        check("unknot normalization, m1,m2 <= 8", grid(8), |&w| jones_t2b(1, w).is_ok_and(|r| r.value.is_one())),
        check(
            "integrality and J(1) = 1, b in {3,5}, m1,m2 <= 5",
            [3u32, 5].into_iter().flat_map(|b| grid(5).map(move |w| (b, w))),
            |&(b, w)| jones_t2b(b, w).is_ok_and(|r| r.value.scale() == 1 && r.value.eval_one() == 1.into()),
        ),
        check(
            "jones_rosso(2,b) = jones_t2b(b), b in {1,3}, m1,m2 <= 2",
            [1u32, 3].into_iter().flat_map(|b| grid(2).map(move |w| (b, w))),
            |&(b, w)| {
                let knot = TorusKnotSpec::new(2, b).expect("coprime");
                jones_rosso(knot, w).ok().map(|r| r.value) == jones_t2b(b, w).ok().map(|r| r.value)
            },
        ),
        check("T(2,3) = T(3,2), m1,m2 <= 2", grid(2), |&w| {
            let (k23, k32) = (TorusKnotSpec::new(2, 3).expect("coprime"), TorusKnotSpec::new(3, 2).expect("coprime"));
            jones_rosso(k23, w).ok().map(|r| r.value) == jones_rosso(k32, w).ok().map(|r| r.value)
        }),
        check("product rules, m1 <= 8", (0..=8i64).flat_map(|m1| (0..=m1).map(move |m2| (m1, m2))), |&(m1, m2)| {
            verify_lemma_lr(m1, m2).unwrap_or(false)
        }),
        check("psi2 recurrence, m1 <= 6", (1..=6i64).flat_map(|m1| (0..m1).map(move |m2| (m1, m2))), |&(m1, m2)| {
            verify_lemma_psi2_recurrence(m1, m2).unwrap_or(false)
        }),
        check("golden T(2,3) at (5,7) in 1/q", [Weight::new(5, 7)], |&w| {
            jones_t2b(3, w).is_ok_and(|r| r.in_variable(Variable::QInverse).value == golden_trefoil())
        }),
    ];
    let generic_at_one: Vec<i64> =
        (1..=8).filter(|&m1| check_lr_row(m1, 1, LrCase::Generic).unwrap_or(false)).collect();
    out.push(CheckOutcome {
        name: "generic product row evaluated at m2 = 1",
        passed: None,
        detail: format!("holds for m1 in {generic_at_one:?} of 1..=8"),
    });
    out
}
