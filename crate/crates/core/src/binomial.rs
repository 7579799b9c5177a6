//! Arbitrary-precision combinatorial primitives: binomial coefficients with
//! truncating conventions, the monus (truncated subtraction), Stirling numbers
//! of the second kind, and checkable binomial summation identities.
//!
//! Everything here is exact; there is no floating point and no fixed-width
//! fast path.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Binomial coefficient C(n, k), with C(n, k) = 0 whenever k < 0 or k > n.
///
/// The zero convention lets sums with shifted indices truncate themselves
/// without special-casing the out-of-range terms.
pub fn binom(n: i64, k: i64) -> BigUint {
    if k < 0 || k > n {
        return BigUint::zero();
    }
    // 0 <= k <= n, hence n >= 0.
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut result = BigUint::one();
    for i in 0..k {
        // Exact at every step: the running value is C(n, i+1) after dividing.
        result = result * (n - i) / (i + 1);
    }
    result
}

/// `binom` as a signed integer, convenient inside signed identity arithmetic.
pub fn binom_int(n: i64, k: i64) -> BigInt {
    BigInt::from(binom(n, k))
}

/// Truncated subtraction on integers: max(a - b, 0).
pub fn monus(a: i64, b: i64) -> u64 {
    ((a as i128) - (b as i128)).max(0) as u64
}

/// Truncated subtraction on arbitrary-precision counts: max(a - b, 0).
pub fn monus_big(a: &BigUint, b: &BigUint) -> BigUint {
    if a > b {
        a - b
    } else {
        BigUint::zero()
    }
}

/// n! as an arbitrary-precision integer.
pub fn factorial(n: u64) -> BigUint {
    let mut result = BigUint::one();
    for i in 2..=n {
        result *= i;
    }
    result
}

/// Stirling number of the second kind S(n, k): the number of partitions of an
/// n-element set into k nonempty blocks.
///
/// Computed by the recurrence S(n, k) = k·S(n-1, k) + S(n-1, k-1).
pub fn stirling2(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    if n == 0 {
        return BigUint::one(); // S(0, 0) = 1
    }
    if k == 0 {
        return BigUint::zero();
    }
    let width = k as usize;
    // row[j] holds S(i, j); updated right-to-left so row[j-1] is still S(i-1, j-1).
    let mut row = vec![BigUint::zero(); width + 1];
    row[0] = BigUint::one();
    for _ in 1..=n {
        for j in (1..=width).rev() {
            let carried = std::mem::take(&mut row[j]);
            row[j] = carried * (j as u64) + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    row.pop().unwrap()
}

/// Outcome of checking one identity family over a parameter grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityGridOutcome {
    pub cases: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl IdentityGridOutcome {
    pub fn pass(&self) -> bool {
        self.failures == 0
    }
}

/// Checks, by direct summation against the closed forms,
///
/// * Σ_{j=0}^{q-1} j·C(j+n-1, n-1) = n·C(q+n-1, n+1), and
/// * Σ_{j=1}^{q}   j·C(q-j+n-1, n-1) = C(q+n, n+1).
///
/// Returns one agreement flag per identity.
pub fn check_weighted_sum_identities(q: u64, n: u64) -> (bool, bool) {
    let (q, n) = (q as i64, n as i64);

    let mut lhs1 = BigInt::zero();
    for j in 0..q {
        lhs1 += j * binom_int(j + n - 1, n - 1);
    }
    let rhs1 = n * binom_int(q + n - 1, n + 1);

    let mut lhs2 = BigInt::zero();
    for j in 1..=q {
        lhs2 += j * binom_int(q - j + n - 1, n - 1);
    }
    let rhs2 = binom_int(q + n, n + 1);

    (lhs1 == rhs1, lhs2 == rhs2)
}

/// Checks, by direct summation with t(j) = min(r+1, q-j) over j = 1..q-1,
///
/// * Σ t(j) = (q-1)(r+1) - C(r+1, 2) = q(r+1) - C(r+2, 2),
/// * Σ t(j)·C(q-1-j+n-1, n-1) = (r+1)·C(q+n-2, n) - C(r+n, n+1),
/// * Σ t(j)·C(q-1-j+n-1, n)
///   = (r+1)·C(q+n-2, n+1) - (r-1)·C(r+n-1, n+1) + (n+1)·C(r+n-1, n+2).
///
/// Requires r < q; returns one agreement flag per identity.
pub fn check_capped_sum_identities(q: u64, r: u64, n: u64) -> Result<(bool, bool, bool)> {
    if r >= q {
        return Err(Error::InvalidArgument(format!(
            "capped-sum identities require r < q, got r = {r}, q = {q}"
        )));
    }
    let (q, r, n) = (q as i64, r as i64, n as i64);

    let mut plain = BigInt::zero();
    let mut weighted_low = BigInt::zero();
    let mut weighted_high = BigInt::zero();
    for j in 1..q {
        let t = (r + 1).min(q - j);
        plain += t;
        weighted_low += t * binom_int(q - 1 - j + n - 1, n - 1);
        weighted_high += t * binom_int(q - 1 - j + n - 1, n);
    }

    let plain_a = (q - 1) * (r + 1) - binom_int(r + 1, 2);
    let plain_b = q * (r + 1) - binom_int(r + 2, 2);
    let low_rhs = (r + 1) * binom_int(q + n - 2, n) - binom_int(r + n, n + 1);
    let high_rhs = (r + 1) * binom_int(q + n - 2, n + 1) - (r - 1) * binom_int(r + n - 1, n + 1)
        + (n + 1) * binom_int(r + n - 1, n + 2);

    Ok((
        plain == plain_a && plain == plain_b,
        weighted_low == low_rhs,
        weighted_high == high_rhs,
    ))
}

/// Checks Σ_{j=1}^{q-1} Σ_{i=0}^{q-1} min(q-i, q-j) = 2·C(q+1, 3) by direct
/// double summation.
pub fn check_symmetric_min_sum(q: u64) -> bool {
    let q = q as i64;
    let mut sum = BigInt::zero();
    for j in 1..q {
        for i in 0..q {
            sum += (q - i).min(q - j);
        }
    }
    sum == 2 * binom_int(q + 1, 3)
}

/// Checks, by direct double summation with u(i, j) = min(r-i+1, q-j),
///
/// * Σ_{i=0}^{r} Σ_{j=1}^{q-1} u(i, j) = q·C(r+2, 2) - C(r+3, 3), and
/// * Σ_{i=0}^{r} Σ_{j=0}^{q-1} u(i, j) = q·C(r+2, 2) - C(r+2, 3).
///
/// Requires r < q; returns one agreement flag per identity.
pub fn check_shifted_min_sums(q: u64, r: u64) -> Result<(bool, bool)> {
    if r >= q {
        return Err(Error::InvalidArgument(format!(
            "shifted-min identities require r < q, got r = {r}, q = {q}"
        )));
    }
    let (q, r) = (q as i64, r as i64);

    let mut inner = BigInt::zero(); // j from 1
    let mut full = BigInt::zero(); // j from 0
    for i in 0..=r {
        for j in 0..q {
            let u = BigInt::from((r - i + 1).min(q - j));
            if j >= 1 {
                inner += &u;
            }
            full += u;
        }
    }

    let head = q * binom_int(r + 2, 2);
    Ok((
        inner == &head - binom_int(r + 3, 3),
        full == head - binom_int(r + 2, 3),
    ))
}

/// Runs all four identity families over the grid q <= max_q, n <= max_n,
/// r < q, returning one outcome per family.
pub fn identity_grid(max_q: u64, max_n: u64) -> Vec<(&'static str, IdentityGridOutcome)> {
    let mut report = Vec::new();

    let mut outcome = IdentityGridOutcome {
        cases: 0,
        failures: 0,
        first_failure: None,
    };
    for q in 1..=max_q {
        for n in 1..=max_n {
            outcome.cases += 1;
            let (a, b) = check_weighted_sum_identities(q, n);
            if !(a && b) {
                outcome.failures += 1;
                outcome
                    .first_failure
                    .get_or_insert_with(|| format!("q={q} n={n}"));
            }
        }
    }
    report.push(("weighted-binomial-sums", outcome));

    let mut outcome = IdentityGridOutcome {
        cases: 0,
        failures: 0,
        first_failure: None,
    };
    for q in 1..=max_q {
        for r in 0..q {
            for n in 1..=max_n {
                outcome.cases += 1;
                let (a, b, c) = check_capped_sum_identities(q, r, n).expect("r < q by loop");
                if !(a && b && c) {
                    outcome.failures += 1;
                    outcome
                        .first_failure
                        .get_or_insert_with(|| format!("q={q} r={r} n={n}"));
                }
            }
        }
    }
    report.push(("capped-min-sums", outcome));

    let mut outcome = IdentityGridOutcome {
        cases: 0,
        failures: 0,
        first_failure: None,
    };
    for q in 0..=max_q {
        outcome.cases += 1;
        if !check_symmetric_min_sum(q) {
            outcome.failures += 1;
            outcome
                .first_failure
                .get_or_insert_with(|| format!("q={q}"));
        }
    }
    report.push(("symmetric-min-double-sum", outcome));

    let mut outcome = IdentityGridOutcome {
        cases: 0,
        failures: 0,
        first_failure: None,
    };
    for q in 1..=max_q {
        for r in 0..q {
            outcome.cases += 1;
            let (a, b) = check_shifted_min_sums(q, r).expect("r < q by loop");
            if !(a && b) {
                outcome.failures += 1;
                outcome
                    .first_failure
                    .get_or_insert_with(|| format!("q={q} r={r}"));
            }
        }
    }
    report.push(("shifted-min-double-sums", outcome));

    report
}

/// Signum helper for (-1)^k exponents in inclusion-exclusion sums.
pub(crate) fn neg_one_pow(k: u64) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

pub(crate) fn bigint_to_biguint(value: BigInt, context: &str) -> BigUint {
    assert!(
        !value.is_negative(),
        "{context}: expected a nonnegative value, got {value}"
    );
    value.to_biguint().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn binom_small_values() {
        assert_eq!(binom(5, 3), nat(10));
        assert_eq!(binom(3, 5), nat(0));
        // C(q+1, 3) at q = 3
        assert_eq!(binom(4, 3), nat(4));
        assert_eq!(binom(0, 0), nat(1));
        assert_eq!(binom(7, 0), nat(1));
        assert_eq!(binom(-2, 0), nat(0));
        assert_eq!(binom(5, -1), nat(0));
    }

    #[test]
    fn binom_pascal_and_symmetry_grid() {
        // Pascal's rule needs a predecessor row: at n = 0 the right side is
        // empty under the zero conventions, so the grid starts at n = 1.
        for n in 0..=40i64 {
            for k in 0..=n {
                let value = binom(n, k);
                if n >= 1 {
                    assert_eq!(
                        value,
                        binom(n - 1, k - 1) + binom(n - 1, k),
                        "Pascal at ({n},{k})"
                    );
                }
                assert_eq!(value, binom(n, n - k), "symmetry at ({n},{k})");
            }
        }
    }

    #[test]
    fn monus_examples() {
        assert_eq!(monus(5, 3), 2);
        assert_eq!(monus(3, 5), 0);
        assert_eq!(monus(4, 4), 0);
    }

    #[test]
    fn monus_difference_identity() {
        for a in -20..=20i64 {
            for b in -20..=20i64 {
                assert_eq!(monus(a, b) as i128 - monus(b, a) as i128, (a - b) as i128);
                if a >= b {
                    assert_eq!(monus(a, b) as i128, (a - b) as i128);
                } else {
                    assert_eq!(monus(a, b), 0);
                }
            }
        }
    }

    #[test]
    fn monus_big_clamps() {
        assert_eq!(monus_big(&nat(7), &nat(3)), nat(4));
        assert_eq!(monus_big(&nat(3), &nat(7)), nat(0));
        assert_eq!(monus_big(&nat(3), &nat(3)), nat(0));
    }

    /// Counts partitions of {0, .., n-1} into exactly k nonempty blocks by
    /// assigning each element either to an existing block or to a new one.
    fn count_partitions(n: u64, k: u64) -> BigUint {
        fn go(remaining: u64, open_blocks: u64, target: u64) -> BigUint {
            if remaining == 0 {
                return if open_blocks == target {
                    BigUint::one()
                } else {
                    BigUint::zero()
                };
            }
            let mut total = go(remaining - 1, open_blocks, target) * open_blocks;
            if open_blocks < target {
                total += go(remaining - 1, open_blocks + 1, target);
            }
            total
        }
        go(n, 0, k)
    }

    #[test]
    fn stirling_examples_match_enumeration() {
        assert_eq!(stirling2(3, 2), nat(3));
        assert_eq!(count_partitions(3, 2), nat(3));
        assert_eq!(stirling2(5, 3), nat(25));
        assert_eq!(count_partitions(5, 3), nat(25));
        assert_eq!(stirling2(4, 4), nat(1));
    }

    #[test]
    fn stirling_grid_matches_enumeration() {
        for n in 1..=12u64 {
            for k in 1..=n {
                assert_eq!(stirling2(n, k), count_partitions(n, k), "S({n},{k})");
            }
        }
    }

    #[test]
    fn stirling_edge_rows() {
        assert_eq!(stirling2(0, 0), nat(1));
        assert_eq!(stirling2(6, 0), nat(0));
        assert_eq!(stirling2(2, 5), nat(0));
    }

    #[test]
    fn weighted_sum_examples() {
        // q=4, n=2: both sums come to 20 = C(6, 3).
        assert_eq!(check_weighted_sum_identities(4, 2), (true, true));
        // q=1 collapses both sums to single terms.
        assert_eq!(check_weighted_sum_identities(1, 3), (true, true));
        assert_eq!(check_weighted_sum_identities(10, 5), (true, true));
    }

    #[test]
    fn capped_sum_examples() {
        assert_eq!(
            check_capped_sum_identities(5, 2, 2).unwrap(),
            (true, true, true)
        );
        // r = 0 makes every min equal 1.
        assert_eq!(
            check_capped_sum_identities(2, 0, 3).unwrap(),
            (true, true, true)
        );
        // boundary r = q-1
        assert_eq!(
            check_capped_sum_identities(7, 6, 4).unwrap(),
            (true, true, true)
        );
        assert!(check_capped_sum_identities(4, 4, 2).is_err());
    }

    #[test]
    fn symmetric_min_examples() {
        // q=3: inner sums are 5 and 3, total 8 = 2*C(4, 3).
        assert!(check_symmetric_min_sum(3));
        assert!(check_symmetric_min_sum(0));
        assert!(check_symmetric_min_sum(12));
    }

    #[test]
    fn shifted_min_examples() {
        assert_eq!(check_shifted_min_sums(3, 1).unwrap(), (true, true));
        assert_eq!(check_shifted_min_sums(2, 0).unwrap(), (true, true));
        assert_eq!(check_shifted_min_sums(9, 8).unwrap(), (true, true));
        assert!(check_shifted_min_sums(3, 3).is_err());
    }

    #[test]
    fn identity_grid_small() {
        for (name, outcome) in identity_grid(12, 4) {
            assert!(outcome.pass(), "{name} failed: {:?}", outcome.first_failure);
        }
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), nat(1));
        assert_eq!(factorial(5), nat(120));
        assert_eq!(factorial(10), nat(3_628_800));
    }
}
