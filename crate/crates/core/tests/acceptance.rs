//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.
//!
//! Run with `cargo test --release --test acceptance`.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use sl3jones::cli::table_rows;
use sl3jones::jones::{degree_report, jones_rosso, jones_t2b, TorusKnotSpec, Variable};
use sl3jones::laurent::ScaledLaurent;
use sl3jones::plethysm2::{psi2_closed, psi2_schur_form, signed_dimension, SignedWeightSum};
use sl3jones::schur3::{psi_oracle, verify_lemma_lr, verify_lemma_psi2_recurrence};
use sl3jones::sl3rep::{qdim_closed, qdim_weyl, twist_weyl_check, Weight};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn read_pairs(text: &str) -> Vec<Vec<i64>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().map(|x| x.parse().unwrap()).collect())
        .collect()
}

fn grid(max: u32) -> impl Iterator<Item = Weight> {
    (0..=max).flat_map(move |m1| (0..=max).map(move |m2| Weight::new(m1, m2)))
}

fn all<T: std::fmt::Debug>(cases: impl IntoIterator<Item = T>, mut ok: impl FnMut(&T) -> bool) -> Outcome {
    let mut n = 0;
    for case in cases {
        n += 1;
        if !ok(&case) {
            return Err(format!("fails at {case:?}"));
        }
    }
    Ok(format!("{n} cases"))
}

fn within(limit: Duration, start: Instant, detail: String) -> Outcome {
    let took = start.elapsed();
    if took < limit {
        Ok(format!("{detail}, {took:.2?}"))
    } else {
        Err(format!("{detail}, took {took:.2?} (limit {limit:?})"))
    }
}

fn golden_trefoil() -> Outcome {
    let start = Instant::now();
    let got = jones_t2b(3, Weight::new(5, 7)).map_err(|e| e.to_string())?.value.mirror();
    let expected = ScaledLaurent::from_terms(
        1,
        read_pairs(include_str!("data/trefoil_5_7_qinv.txt")).into_iter().map(|v| (v[0], v[1])),
    );
    if got != expected {
        return Err(format!("mismatch: {} terms vs {} expected", got.len(), expected.len()));
    }
    within(Duration::from_secs(1), start, format!("{} terms", got.len()))
}

fn golden_plethysm() -> Outcome {
    let expected: SignedWeightSum = read_pairs(include_str!("data/psi2_5_7.txt"))
        .into_iter()
        .map(|v| (Weight::new(v[0] as u32, v[1] as u32), v[2]))
        .collect();
    let got = psi2_closed(Weight::new(5, 7));
    if got == expected {
        Ok(format!("{} terms", got.len()))
    } else {
        Err(format!("got {got}"))
    }
}

fn large_weight() -> Outcome {
    let start = Instant::now();
    let r = jones_t2b(3, Weight::new(70, 70)).map_err(|e| e.to_string())?.in_variable(Variable::QInverse);
    let rep = degree_report(&r).map_err(|e| e.to_string())?;
    let ints = |v: &[num_rational::Ratio<i64>]| v.iter().map(|x| x.to_integer()).collect::<Vec<_>>();
    let checks = [
        (rep.min_deg == 280.into(), "min degree 280"),
        (rep.max_deg == 30100.into(), "max degree 30100"),
        (rep.leading == BigInt::from(1) && rep.trailing == BigInt::from(1), "extreme coefficients 1"),
        (rep.min_coeff == BigInt::from(-55196), "min coefficient -55196"),
        (ints(&rep.min_coeff_at) == [18854, 18925], "min at {18854, 18925}"),
        (rep.max_coeff == BigInt::from(65594), "max coefficient 65594"),
        (ints(&rep.max_coeff_at) == [18165], "max at {18165}"),
    ];
    if let Some((_, what)) = checks.iter().find(|(ok, _)| !ok) {
        return Err(format!("expected {what}, got {rep}"));
    }
    within(Duration::from_secs(120), start, format!("{} terms, span [280, 30100]", rep.term_count))
}

fn oracle_equivalence() -> Outcome {
    all(grid(10), |&w| psi_oracle(w, 2).ok() == Some(psi2_closed(w)))
}

fn schur_form() -> Outcome {
    all((0..=16i64).flat_map(|m1| (0..=m1).map(move |m2| (m1, m2))), |&(m1, m2)| {
        psi2_schur_form(m1, m2).ok() == Some(psi2_closed(Weight::new((m1 - m2) as u32, m2 as u32)))
    })
}

fn unknot() -> Outcome {
    all(grid(15), |&w| jones_t2b(1, w).is_ok_and(|r| r.value.is_one()))
}

fn integrality() -> Outcome {
    all([3u32, 5, 7, 9].into_iter().flat_map(|b| grid(12).map(move |w| (b, w))), |&(b, w)| {
        jones_t2b(b, w).is_ok_and(|r| r.value.scale() == 1 && r.value.eval_one() == BigInt::from(1))
    })
}

fn cross_formula() -> Outcome {
    let knot = |a, b| TorusKnotSpec::new(a, b).unwrap();
    let rosso = all([1u32, 3, 5].into_iter().flat_map(|b| grid(4).map(move |w| (b, w))), |&(b, w)| {
        jones_rosso(knot(2, b), w).ok().map(|r| r.value) == jones_t2b(b, w).ok().map(|r| r.value)
    })?;
    let sym = all(grid(3), |&w| {
        jones_rosso(knot(2, 3), w).ok().map(|r| r.value) == jones_rosso(knot(3, 2), w).ok().map(|r| r.value)
    })?;
    Ok(format!("two-strand {rosso}; torus symmetry {sym}"))
}

fn specialization() -> Outcome {
    all(grid(12), |&w| qdim_weyl(w).ok() == qdim_closed(w).ok() && twist_weyl_check(w))
}

fn identity_suites() -> Outcome {
    let lr = all((0..=12i64).flat_map(|m1| (0..=m1).map(move |m2| (m1, m2))), |&(m1, m2)| {
        verify_lemma_lr(m1, m2).unwrap_or(false)
    })?;
    let rec = all((1..=10i64).flat_map(|m1| (0..m1).map(move |m2| (m1, m2))), |&(m1, m2)| {
        verify_lemma_psi2_recurrence(m1, m2).unwrap_or(false)
    })?;
    let dim = all([2u32, 3].into_iter().flat_map(|a| grid(8).map(move |w| (a, w))), |&(a, w)| {
        psi_oracle(w, a).is_ok_and(|s| signed_dimension(&s) == i128::from(w.dimension()))
    })?;
    Ok(format!("product rules {lr}; recurrence {rec}; signed dimension {dim}"))
}

fn throughput() -> Outcome {
    let start = Instant::now();
    let rows = table_rows(3, 20, Variable::Q, false, 1).map_err(|e| e.to_string())?;
    if rows.len() != 441 {
        return Err(format!("{} rows", rows.len()));
    }
    within(Duration::from_secs(60), start, "441 cells serial".to_string())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("golden trefoil J(T(2,3); 5,7)", golden_trefoil),
        ("golden plethysm psi2(V_{5,7})", golden_plethysm),
        ("large-weight statistics (70,70)", large_weight),
        ("psi2_closed = psi_oracle(., 2), m <= 10", oracle_equivalence),
        ("Schur form = closed form, m1 <= 16", schur_form),
        ("unknot normalization, m <= 15", unknot),
        ("integrality and J(1) = 1, b in {3,5,7,9}, m <= 12", integrality),
        ("cross-formula and torus symmetry", cross_formula),
        ("Weyl formulas specialize, m <= 12", specialization),
        ("product rules, recurrence, signed dimension", identity_suites),
        ("table --b 3 --max 20 throughput", throughput),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
