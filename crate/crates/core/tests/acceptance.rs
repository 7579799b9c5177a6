//! Acceptance suite: every criterion is exact equality — no tolerances
//! anywhere. Each test prints one pass/fail line (visible with
//! `cargo test --test acceptance -- --nocapture`).

use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use hkdet::binomial::identity_grid;
use hkdet::closed_forms::{ey_multiplicity, ClosedFormId};
use hkdet::counting::Counter;
use hkdet::fit;
use hkdet::groebner::{standard_monomial_count, verify_groebner};
use hkdet::oracles::{brute_battery, segre_battery, DEFAULT_ENUM_BUDGET};
use hkdet::RationalPolynomial;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn report(criterion: &str, pass: bool, detail: String, started: Instant) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!(
        "criterion {criterion}: {status} ({detail}, {:.2}s)",
        started.elapsed().as_secs_f64()
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

/// 1. The recursion equals exhaustive enumeration for all m, n <= 3,
///    q <= 4 over the full bound battery (all-infinite, all q-1, single-bound
///    perturbations, 50 seeded random bound vectors per shape).
#[test]
fn criterion_1_brute_oracle_equivalence() {
    let started = Instant::now();
    let outcome = brute_battery(3, 4, 7, DEFAULT_ENUM_BUDGET).expect("battery within budget");
    report(
        "1 (brute-oracle equivalence)",
        outcome.pass(),
        match &outcome.mismatch {
            None => format!("{} cases", outcome.cases),
            Some(m) => format!(
                "mismatch at {:?}: oracle {} vs {}",
                m.query, m.oracle, m.recursion
            ),
        },
        started,
    );
}

/// 2. The recursion equals the Segre degree-sum formula for all m, n <= 4,
///    q <= 8.
#[test]
fn criterion_2_segre_oracle_equivalence() {
    let started = Instant::now();
    let outcome = segre_battery(4, 8);
    report(
        "2 (Segre-oracle equivalence)",
        outcome.pass(),
        match &outcome.mismatch {
            None => format!("{} cases", outcome.cases),
            Some(m) => format!(
                "mismatch at {:?}: oracle {} vs {}",
                m.query, m.oracle, m.recursion
            ),
        },
        started,
    );
}

/// 3. Every 2×n closed-form count family matches the recursion on its bound
///    pattern for n in 2..5, q in 2..7, r in 0..q-1.
#[test]
fn criterion_3_closed_form_battery() {
    let started = Instant::now();
    let mut counter = Counter::new();
    let mut cases = 0u64;
    let mut failure = None;

    'sweep: for n in 2..=5u32 {
        for q in 2..=7u64 {
            // The r-free pattern: unbounded rows, every column at q-1.
            let value = hkdet::closed_forms::eval_closed_form(ClosedFormId::InfQm1, n, q, None)
                .unwrap()
                .as_count()
                .unwrap()
                .clone();
            let query = ClosedFormId::InfQm1.matching_query(n, q, None).unwrap();
            cases += 1;
            if value != counter.count(&query) {
                failure = Some(format!("InfQm1 n={n} q={q}"));
                break 'sweep;
            }
            for r in 0..q {
                for id in ClosedFormId::WITH_R {
                    let value = hkdet::closed_forms::eval_closed_form(id, n, q, Some(r))
                        .unwrap()
                        .as_count()
                        .unwrap()
                        .clone();
                    let query = id.matching_query(n, q, Some(r)).unwrap();
                    cases += 1;
                    if value != counter.count(&query) {
                        failure = Some(format!("{id:?} n={n} q={q} r={r}"));
                        break 'sweep;
                    }
                }
            }
        }
    }

    report(
        "3 (closed-form battery)",
        failure.is_none(),
        failure.unwrap_or(format!("{cases} cases")),
        started,
    );
}

/// 4. The recursion reproduces the four listed 2×n Hilbert-Kunz polynomials
///    exactly for q = 1..16.
#[test]
fn criterion_4_hk_polynomials() {
    let started = Instant::now();
    let listed: [(u32, RationalPolynomial); 4] = [
        (
            2,
            RationalPolynomial::from_coefficients(vec![
                rat(0, 1),
                rat(-1, 3),
                rat(0, 1),
                rat(4, 3),
            ]),
        ),
        (
            3,
            RationalPolynomial::from_coefficients(vec![
                rat(0, 1),
                rat(-2, 8),
                rat(-1, 8),
                rat(-2, 8),
                rat(13, 8),
            ]),
        ),
        (
            4,
            RationalPolynomial::from_coefficients(vec![
                rat(0, 1),
                rat(-6, 30),
                rat(-5, 30),
                rat(5, 30),
                rat(-25, 30),
                rat(61, 30),
            ]),
        ),
        (
            5,
            RationalPolynomial::from_coefficients(vec![
                rat(0, 1),
                rat(-24, 144),
                rat(-26, 144),
                rat(15, 144),
                rat(25, 144),
                rat(-207, 144),
                rat(361, 144),
            ]),
        ),
    ];

    let mut counter = Counter::new();
    let mut cases = 0u64;
    let mut failure = None;
    'sweep: for (n, poly) in &listed {
        for q in 1..=16u64 {
            cases += 1;
            let expected = poly.evaluate_at_integer(q);
            let actual = BigRational::from_integer(BigInt::from(counter.hilbert_kunz(2, *n, q)));
            if expected != actual {
                failure = Some(format!("n={n} q={q}: {actual} vs listed {expected}"));
                break 'sweep;
            }
        }
    }

    report(
        "4 (2xn Hilbert-Kunz polynomials)",
        failure.is_none(),
        failure.unwrap_or(format!("{cases} cases")),
        started,
    );
}

/// 5. The fitted multiplicities for 2×n are n/2 + n/(n+1)!, i.e. 4/3, 13/8,
///    61/30, 361/144 for n = 2..5.
#[test]
fn criterion_5_multiplicities() {
    let started = Instant::now();
    let expected = [
        (2, rat(4, 3)),
        (3, rat(13, 8)),
        (4, rat(61, 30)),
        (5, rat(361, 144)),
    ];
    let mut failure = None;
    for (n, value) in &expected {
        let fitted = fit::multiplicity(2, *n).expect("fit succeeds");
        let formula = rat(*n as i64, 2)
            + BigRational::new(
                BigInt::from(*n),
                BigInt::from(hkdet::binomial::factorial(*n as u64 + 1)),
            );
        if &fitted != value || fitted != formula {
            failure = Some(format!(
                "n={n}: fitted {fitted}, listed {value}, formula {formula}"
            ));
            break;
        }
    }
    report(
        "5 (multiplicities)",
        failure.is_none(),
        failure.unwrap_or("4 cases".into()),
        started,
    );
}

/// 6. Polynomiality: the degree-(m+n-1) interpolant through q = 1..m+n
///    predicts q = m+n+1..m+n+3 exactly.
#[test]
fn criterion_6_polynomiality() {
    let started = Instant::now();
    let mut counter = Counter::new();
    let mut failure = None;
    for (m, n) in [(2u32, 2u32), (2, 3), (3, 3), (2, 4)] {
        let samples: Vec<(u64, BigUint)> = (1..=(m + n + 3) as u64)
            .map(|q| (q, counter.hilbert_kunz(m, n, q)))
            .collect();
        match fit::interpolate(&samples, (m + n - 1) as usize) {
            Ok(poly) => {
                assert_eq!(poly.degree(), Some((m + n - 1) as usize));
            }
            Err(err) => {
                failure = Some(format!("({m},{n}): {err}"));
                break;
            }
        }
    }
    report(
        "6 (polynomiality)",
        failure.is_none(),
        failure.unwrap_or("4 shapes, 3 guard points each".into()),
        started,
    );
}

/// 7. The predicted Gröbner basis verifies and its standard-monomial count
///    matches the recursion on the listed grids.
#[test]
fn criterion_7_groebner_verification() {
    let started = Instant::now();
    let mut counter = Counter::new();
    let mut failure = None;
    for (m, n, q) in [
        (2u32, 2u32, 2u64),
        (2, 2, 3),
        (2, 3, 2),
        (3, 3, 2),
        (2, 4, 2),
    ] {
        let report = verify_groebner(m, n, q).expect("within budget");
        if !report.pass() {
            failure = Some(format!("({m},{n},{q}) verification: {:?}", report.failures));
            break;
        }
        let standard = standard_monomial_count(m, n, q).expect("within budget");
        let recursion = counter.hilbert_kunz(m, n, q);
        if standard != recursion {
            failure = Some(format!(
                "({m},{n},{q}) standard {standard} vs recursion {recursion}"
            ));
            break;
        }
    }
    report(
        "7 (Groebner verification)",
        failure.is_none(),
        failure.unwrap_or("5 grids".into()),
        started,
    );
}

/// 8. All four binomial identity families hold over q <= 30, n <= 6, r < q.
#[test]
fn criterion_8_binomial_identities() {
    let started = Instant::now();
    let outcomes = identity_grid(30, 6);
    let cases: u64 = outcomes.iter().map(|(_, o)| o.cases).sum();
    let failure = outcomes
        .iter()
        .find(|(_, o)| !o.pass())
        .map(|(name, o)| format!("{name}: {:?}", o.first_failure));
    report(
        "8 (binomial identities)",
        failure.is_none(),
        failure.unwrap_or(format!("{cases} cases")),
        started,
    );
}

/// 9. The Stirling-number multiplicity formula agrees with the fitted
///    multiplicity for m = 2, n = 2..6; the 3×3 comparison is reported but
///    not asserted (the literal formula is known to deviate there).
#[test]
fn criterion_9_stirling_formula_consistency() {
    let started = Instant::now();
    let mut failure = None;
    for n in 2..=6u32 {
        let formula = ey_multiplicity(2, n);
        let fitted = fit::multiplicity(2, n).expect("fit succeeds");
        if formula != fitted {
            failure = Some(format!("n={n}: formula {formula} vs fitted {fitted}"));
            break;
        }
    }

    let formula_33 = ey_multiplicity(3, 3);
    let fitted_33 = fit::multiplicity(3, 3).expect("fit succeeds");
    println!(
        "criterion 9 note: 3x3 comparison (reported, not asserted): \
         formula gives {formula_33}, fitted multiplicity is {fitted_33}, \
         agree: {}; a value below 1 is impossible for a multiplicity \
         (formula < 1: {})",
        formula_33 == fitted_33,
        formula_33 < BigRational::one(),
    );

    report(
        "9 (Stirling formula consistency)",
        failure.is_none(),
        failure.unwrap_or("n = 2..6 asserted, 3x3 reported".into()),
        started,
    );
}
