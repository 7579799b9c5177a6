//! Closed-form counts, polynomials, and multiplicities for the 2×n case.
//!
//! Each count family is keyed by its bound pattern on the two rows and the n
//! columns. The formulas are evaluated exactly and double as independent
//! checks on the counting recursion ([`ClosedFormId::matching_query`] gives
//! the query each family must agree with). [`ey_multiplicity`] evaluates the
//! Stirling-number multiplicity formula from the Segre-product literature for
//! cross-checking the m = 2 column.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::binomial::{bigint_to_biguint, binom_int, factorial, neg_one_pow, stirling2};
use crate::counting::{Bound, CountQuery};
use crate::error::{Error, Result};
use crate::polynomial::RationalPolynomial;

/// The closed-form families for the 2×n case, keyed by bound pattern: the
/// pattern of the two row bounds, then the pattern of the n column bounds.
/// Wherever `r` appears it must be below q.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormId {
    /// rows (inf, inf), every column q-1
    InfQm1,
    /// rows (inf, r), every column unbounded
    InfRInf,
    /// rows (inf, r), every column q-1
    InfRQm1,
    /// rows (inf, inf), every column unbounded: the Hilbert-Kunz value itself
    Hk2n,
    /// the limit of Hk2n over q^(n+1): the Hilbert-Kunz multiplicity
    Mult2n,
    /// rows (inf, r), first column unbounded, remaining columns q-1
    InfRInfQm1,
    /// rows (q-1, r), every column q-1
    Qm1RQm1,
    /// rows (q-1, r), every column unbounded
    Qm1RInf,
}

impl ClosedFormId {
    pub const ALL: [ClosedFormId; 8] = [
        ClosedFormId::InfQm1,
        ClosedFormId::InfRInf,
        ClosedFormId::InfRQm1,
        ClosedFormId::Hk2n,
        ClosedFormId::Mult2n,
        ClosedFormId::InfRInfQm1,
        ClosedFormId::Qm1RQm1,
        ClosedFormId::Qm1RInf,
    ];

    /// The six count families with an r parameter in their bound pattern.
    pub const WITH_R: [ClosedFormId; 5] = [
        ClosedFormId::InfRInf,
        ClosedFormId::InfRQm1,
        ClosedFormId::InfRInfQm1,
        ClosedFormId::Qm1RQm1,
        ClosedFormId::Qm1RInf,
    ];

    pub fn requires_r(self) -> bool {
        ClosedFormId::WITH_R.contains(&self)
    }

    /// The count query this family must agree with (None for the
    /// multiplicity, which is not a single count).
    pub fn matching_query(self, n: u32, q: u64, r: Option<u64>) -> Option<CountQuery> {
        let inf = Bound::Infinite;
        let capped = Bound::Finite(q as i64 - 1);
        let r_bound = r.map(|r| Bound::Finite(r as i64));
        let (rows, cols) = match self {
            ClosedFormId::InfQm1 => (vec![inf, inf], vec![capped; n as usize]),
            ClosedFormId::InfRInf => (vec![inf, r_bound?], vec![inf; n as usize]),
            ClosedFormId::InfRQm1 => (vec![inf, r_bound?], vec![capped; n as usize]),
            ClosedFormId::Hk2n => (vec![inf, inf], vec![inf; n as usize]),
            ClosedFormId::Mult2n => return None,
            ClosedFormId::InfRInfQm1 => {
                let mut cols = vec![capped; n as usize];
                cols[0] = inf;
                (vec![inf, r_bound?], cols)
            }
            ClosedFormId::Qm1RQm1 => (vec![capped, r_bound?], vec![capped; n as usize]),
            ClosedFormId::Qm1RInf => (vec![capped, r_bound?], vec![inf; n as usize]),
        };
        Some(CountQuery::new(2, n, q, rows, cols).expect("pattern shapes are consistent"))
    }
}

/// A closed-form value: most families are counts, the multiplicity is a
/// rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormValue {
    Count(BigUint),
    Ratio(BigRational),
}

impl FormValue {
    pub fn as_count(&self) -> Option<&BigUint> {
        match self {
            FormValue::Count(c) => Some(c),
            FormValue::Ratio(_) => None,
        }
    }

    pub fn as_ratio(&self) -> Option<&BigRational> {
        match self {
            FormValue::Ratio(r) => Some(r),
            FormValue::Count(_) => None,
        }
    }
}

fn pow(base: u64, exp: u32) -> BigInt {
    BigInt::from(base).pow(exp)
}

/// Evaluates one closed form exactly.
///
/// Requires n >= 2 and q >= 1; families with an r in their pattern require
/// r to be given and below q.
pub fn eval_closed_form(id: ClosedFormId, n: u32, q: u64, r: Option<u64>) -> Result<FormValue> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "closed forms cover the 2xn case for n >= 2, got n = {n}"
        )));
    }
    if q == 0 {
        return Err(Error::InvalidArgument("q must be at least 1".into()));
    }
    let r = if id.requires_r() {
        match r {
            Some(r) if (r as u128) < q as u128 => Some(r),
            Some(r) => {
                return Err(Error::InvalidArgument(format!(
                    "closed form needs r < q, got r = {r}, q = {q}"
                )))
            }
            None => {
                return Err(Error::InvalidArgument(
                    "this closed form needs the row bound r".into(),
                ))
            }
        }
    } else {
        None
    };

    let n_i = n as i64;
    let q_i = q as i64;
    let value = match id {
        ClosedFormId::InfQm1 => pow(q, n + 1) + (n_i - 2) * pow(q, n - 1) * binom_int(q_i, 2),
        ClosedFormId::InfRInf => {
            let r = r.unwrap() as i64;
            (n_i - 1) * binom_int(r + n_i, n_i + 1) + (r + 1) * pow(q, n)
        }
        ClosedFormId::InfRQm1 => {
            let r = r.unwrap() as i64;
            (r + 1) * pow(q, n) - binom_int(r + n_i, n_i + 1)
        }
        ClosedFormId::Hk2n => {
            let half = pow(q, n) * (n_i * q_i - n_i + 2) / 2; // q^n(nq-n+2) is even
            half + n_i * binom_int(n_i + q_i - 1, n_i + 1)
        }
        ClosedFormId::Mult2n => {
            return Ok(FormValue::Ratio(hk_multiplicity_2n(n)?));
        }
        ClosedFormId::InfRInfQm1 => {
            let r = r.unwrap() as i64;
            pow(q, n) * (r + 1)
        }
        ClosedFormId::Qm1RQm1 => {
            let r = r.unwrap() as i64;
            let mut value = q_i * binom_int(r + n_i, n_i) - n_i * binom_int(r + n_i, n_i + 1);
            for i in 1..n_i {
                value += binom_int(q_i + i - 1, i + 1) * binom_int(r + n_i - i, n_i - i);
            }
            value
        }
        ClosedFormId::Qm1RInf => {
            let r = r.unwrap() as i64;
            let mut value = q_i * binom_int(r + n_i, n_i);
            for i in 1..n_i {
                value += binom_int(q_i + i - 1, i + 1) * binom_int(r + n_i - i, n_i - i);
            }
            value
        }
    };
    Ok(FormValue::Count(bigint_to_biguint(value, "closed form")))
}

/// The Hilbert-Kunz function of the 2×n case as an exact polynomial in q of
/// degree n + 1: half of nq^(n+1) - (n-2)q^n, plus n times the binomial
/// C(q+n-1, n+1) expanded as the rational-coefficient product of the linear
/// factors (q-1)(q)(q+1)..(q+n-1) over (n+1)!.
pub fn hk_polynomial_2n(n: u32) -> Result<RationalPolynomial> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "the 2xn polynomial needs n >= 2, got n = {n}"
        )));
    }
    let n_i = n as i64;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let head = RationalPolynomial::monomial(
        BigRational::from_integer(BigInt::from(n_i)) * &half,
        n as usize + 1,
    )
    .add(&RationalPolynomial::monomial(
        -BigRational::from_integer(BigInt::from(n_i - 2)) * &half,
        n as usize,
    ));

    let mut rising = RationalPolynomial::constant(BigRational::one());
    for t in -1..n_i {
        rising = rising.times_q_minus(&BigRational::from_integer(BigInt::from(-t)));
    }
    let scale = BigRational::new(BigInt::from(n_i), BigInt::from(factorial(n as u64 + 1)));
    Ok(head.add(&rising.scale(&scale)))
}

/// The Hilbert-Kunz multiplicity of the 2×n case: n/2 + n/(n+1)!.
pub fn hk_multiplicity_2n(n: u32) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "the 2xn multiplicity needs n >= 2, got n = {n}"
        )));
    }
    let n_big = BigInt::from(n);
    Ok(BigRational::new(n_big.clone(), BigInt::from(2))
        + BigRational::new(n_big, BigInt::from(factorial(n as u64 + 1))))
}

/// The Stirling-number multiplicity formula for the m×n case, evaluated
/// literally with d = m + n - 1 (the dimension of the ring):
///
///   (n!/d!)·S(d, n) - (1/d!)·Σ_{r=1}^{m-1} Σ_{s=1}^{m-r}
///       C(m, r+s)·C(n, s)·(-1)^(m+r)·s^d.
///
/// Verified against the recursion only for m = 2; for m >= 3 the literal
/// evaluation disagrees with the recursion's multiplicity (it can even fall
/// below 1), so callers should report the comparison rather than assert it.
pub fn ey_multiplicity(m: u32, n: u32) -> BigRational {
    assert!(m >= 1 && n >= 1, "ey_multiplicity requires m, n >= 1");
    let d = (m + n - 1) as u64;
    let d_factorial = BigInt::from(factorial(d));

    let head = BigRational::new(
        BigInt::from(factorial(n as u64)) * BigInt::from(stirling2(d, n as u64)),
        d_factorial.clone(),
    );

    let mut correction = BigInt::zero();
    for r in 1..m as u64 {
        for s in 1..=(m as u64 - r) {
            correction += binom_int(m as i64, (r + s) as i64)
                * binom_int(n as i64, s as i64)
                * neg_one_pow(m as u64 + r)
                * BigInt::from(s).pow(d as u32);
        }
    }
    head - BigRational::new(correction, d_factorial)
}
