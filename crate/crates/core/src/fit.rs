//! Recovering the Hilbert-Kunz polynomial from exact sample values.
//!
//! The count is a polynomial in q, so finitely many exact samples determine
//! it. [`interpolate`] runs Newton divided differences over the rationals on
//! the first degree_cap + 1 samples and then demands that the result
//! reproduce every remaining sample exactly; [`hk_polynomial`] applies this to
//! the counting recursion with three guard samples past the degree bound
//! m + n - 1, and [`multiplicity`] reads off the top coefficient.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::counting;
use crate::error::{Error, Result};
use crate::polynomial::RationalPolynomial;

/// The unique polynomial of degree <= degree_cap through the first
/// degree_cap + 1 samples, verified to reproduce all remaining samples.
///
/// Sample q-values must be pairwise distinct; at least degree_cap + 1 samples
/// are required.
pub fn interpolate(samples: &[(u64, BigUint)], degree_cap: usize) -> Result<RationalPolynomial> {
    let needed = degree_cap + 1;
    if samples.len() < needed {
        return Err(Error::InvalidArgument(format!(
            "need at least {needed} samples for degree cap {degree_cap}, got {}",
            samples.len()
        )));
    }
    for (i, (q, _)) in samples.iter().enumerate() {
        if samples[..i].iter().any(|(prior, _)| prior == q) {
            return Err(Error::InvalidArgument(format!(
                "sample q-values must be pairwise distinct; q = {q} repeats"
            )));
        }
    }

    let xs: Vec<BigRational> = samples[..needed]
        .iter()
        .map(|(q, _)| BigRational::from_integer(BigInt::from(*q)))
        .collect();
    // Divided-difference table, updated in place: after pass j, coef[i] holds
    // the order-j difference ending at sample i.
    let mut coef: Vec<BigRational> = samples[..needed]
        .iter()
        .map(|(_, v)| BigRational::from_integer(BigInt::from(v.clone())))
        .collect();
    for j in 1..needed {
        for i in (j..needed).rev() {
            let num = &coef[i] - &coef[i - 1];
            coef[i] = num / (&xs[i] - &xs[i - j]);
        }
    }

    // Newton form to coefficient form, highest node first.
    let mut poly = RationalPolynomial::constant(coef[needed - 1].clone());
    for i in (0..needed - 1).rev() {
        poly = poly
            .times_q_minus(&xs[i])
            .add(&RationalPolynomial::constant(coef[i].clone()));
    }

    for (q, value) in &samples[needed..] {
        let predicted = poly.evaluate_at_integer(*q);
        let expected = BigRational::from_integer(BigInt::from(value.clone()));
        if predicted != expected {
            return Err(Error::InterpolationMismatch {
                q: *q,
                expected: Box::new(expected),
                predicted: Box::new(predicted),
            });
        }
    }
    Ok(poly)
}

/// The Hilbert-Kunz polynomial of the m×n case: the counting recursion is
/// sampled at q = 1..m+n+3 and interpolated with degree cap m + n - 1, leaving
/// three guard samples that the interpolant must reproduce exactly.
pub fn hk_polynomial(m: u32, n: u32) -> Result<RationalPolynomial> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(
            "hk_polynomial requires m, n >= 1".into(),
        ));
    }
    let degree = (m + n - 1) as usize;
    let samples: Vec<(u64, BigUint)> = (1..=(m + n + 3) as u64)
        .map(|q| (q, counting::hilbert_kunz(m, n, q)))
        .collect();
    interpolate(&samples, degree)
}

/// The Hilbert-Kunz multiplicity of the m×n case: the coefficient of
/// q^(m+n-1) in [`hk_polynomial`].
pub fn multiplicity(m: u32, n: u32) -> Result<BigRational> {
    let poly = hk_polynomial(m, n)?;
    Ok(poly.coefficient((m + n - 1) as usize))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn nat(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn interpolates_cubic_counts() {
        let samples = vec![(1, nat(1)), (2, nat(10)), (3, nat(35)), (4, nat(84))];
        let poly = interpolate(&samples, 3).unwrap();
        assert_eq!(
            poly.coefficients(),
            &[rat(0, 1), rat(-1, 3), rat(0, 1), rat(4, 3)]
        );
    }

    #[test]
    fn interpolates_constant_data() {
        let samples = vec![(1, nat(7)), (2, nat(7)), (3, nat(7))];
        let poly = interpolate(&samples, 2).unwrap();
        assert_eq!(poly.degree(), Some(0));
        assert_eq!(poly.coefficient(0), rat(7, 1));
    }

    #[test]
    fn under_capped_degree_fails_verification() {
        let samples: Vec<(u64, BigUint)> = (1..=4).map(|q| (q, nat(q * q))).collect();
        match interpolate(&samples, 1) {
            Err(Error::InterpolationMismatch { q, .. }) => assert_eq!(q, 3),
            other => panic!("expected a verification mismatch, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_sample_sets() {
        let samples = vec![(1, nat(1)), (2, nat(10))];
        assert!(matches!(
            interpolate(&samples, 3),
            Err(Error::InvalidArgument(_))
        ));
        let dupes = vec![(1, nat(1)), (1, nat(1)), (2, nat(10))];
        assert!(matches!(
            interpolate(&dupes, 1),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn hk_polynomial_small_cases() {
        let p22 = hk_polynomial(2, 2).unwrap();
        assert_eq!(
            p22.coefficients(),
            &[rat(0, 1), rat(-1, 3), rat(0, 1), rat(4, 3)]
        );

        let p13 = hk_polynomial(1, 3).unwrap();
        assert_eq!(p13, RationalPolynomial::monomial(rat(1, 1), 3));

        let p24 = hk_polynomial(2, 4).unwrap();
        assert_eq!(
            p24.coefficients(),
            &[
                rat(0, 1),
                rat(-6, 30),
                rat(-5, 30),
                rat(5, 30),
                rat(-25, 30),
                rat(61, 30)
            ]
        );
    }

    #[test]
    fn multiplicity_values() {
        assert_eq!(multiplicity(2, 3).unwrap(), rat(13, 8));
        assert_eq!(multiplicity(1, 4).unwrap(), rat(1, 1));
        assert_eq!(multiplicity(2, 5).unwrap(), rat(361, 144));
    }

    #[test]
    fn degree_and_value_at_one() {
        for m in 1..=3u32 {
            for n in m..=(7 - m) {
                let poly = hk_polynomial(m, n).unwrap();
                assert_eq!(poly.degree(), Some((m + n - 1) as usize), "m={m} n={n}");
                assert!(poly.leading_coefficient().unwrap() >= &BigRational::one());
                assert_eq!(poly.evaluate_at_integer(1), rat(1, 1));
                assert_eq!(poly, hk_polynomial(n, m).unwrap());
            }
        }
    }

    #[test]
    fn fitted_polynomials_match_the_closed_forms() {
        for n in 2..=5u32 {
            assert_eq!(
                hk_polynomial(2, n).unwrap(),
                crate::closed_forms::hk_polynomial_2n(n).unwrap(),
                "n={n}"
            );
        }
    }
}
