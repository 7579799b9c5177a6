//! Exact counting of bounded staircase exponent matrices.
//!
//! The central quantity is N_q(m, n; r_1..r_m; c_1..c_n): the number of m×n
//! matrices of nonnegative integer exponents whose support contains no
//! strictly northwest-southeast pair (staircase condition), whose i-th row sum
//! is at most r_i and j-th column sum at most c_j, and which additionally have
//! every row sum below q or every column sum below q.
//!
//! With all bounds infinite this is the generalized Hilbert-Kunz function of
//! the quotient of a polynomial ring in m·n variables by the 2×2 minors of the
//! generic matrix together with the q-th powers of all variables.
//!
//! The computation dispatches on small cases (empty matrix, single row) and
//! otherwise splits on the first column, recursing with memoization. All
//! arithmetic is arbitrary precision.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::binomial::{binom, monus_big};
use crate::error::{Error, Result};

/// A row or column sum cap: a (possibly negative) integer or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bound {
    Finite(i64),
    Infinite,
}

impl Bound {
    pub fn is_negative(self) -> bool {
        matches!(self, Bound::Finite(v) if v < 0)
    }

    /// The bound lowered by `k` (infinity stays infinite).
    pub fn minus(self, k: i64) -> Bound {
        match self {
            Bound::Finite(v) => Bound::Finite(v - k),
            Bound::Infinite => Bound::Infinite,
        }
    }

    /// min(bound, k) as a finite value.
    pub fn cap(self, k: i64) -> i64 {
        match self {
            Bound::Finite(v) => v.min(k),
            Bound::Infinite => k,
        }
    }

    /// min(bound + 1, k) as a finite value.
    pub fn plus_one_cap(self, k: i64) -> i64 {
        match self {
            Bound::Finite(v) => v.saturating_add(1).min(k),
            Bound::Infinite => k,
        }
    }

    /// Whether the bound admits sums of size `k` (bound >= k).
    pub fn at_least(self, k: i64) -> bool {
        match self {
            Bound::Finite(v) => v >= k,
            Bound::Infinite => true,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(v) => write!(f, "{v}"),
            Bound::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for Bound {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("inf") {
            return Ok(Bound::Infinite);
        }
        s.parse::<i64>().map(Bound::Finite).map_err(|_| {
            Error::InvalidArgument(format!("bound must be an integer or \"inf\", got {s:?}"))
        })
    }
}

/// A fully specified count: matrix shape, the parameter q, and one bound per
/// row and per column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CountQuery {
    m: u32,
    n: u32,
    q: u64,
    rows: Vec<Bound>,
    cols: Vec<Bound>,
}

impl CountQuery {
    /// Validates shape and q. Negative bounds are allowed (they give count 0);
    /// m = 0 or n = 0 are allowed as the empty-matrix convention.
    pub fn new(m: u32, n: u32, q: u64, rows: Vec<Bound>, cols: Vec<Bound>) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidArgument("q must be at least 1".into()));
        }
        if q > i64::MAX as u64 {
            return Err(Error::InvalidArgument(format!("q = {q} is out of range")));
        }
        if rows.len() != m as usize {
            return Err(Error::InvalidArgument(format!(
                "expected {m} row bounds, got {}",
                rows.len()
            )));
        }
        if cols.len() != n as usize {
            return Err(Error::InvalidArgument(format!(
                "expected {n} column bounds, got {}",
                cols.len()
            )));
        }
        Ok(CountQuery {
            m,
            n,
            q,
            rows,
            cols,
        })
    }

    /// The query with every bound infinite.
    pub fn unbounded(m: u32, n: u32, q: u64) -> Result<Self> {
        CountQuery::new(
            m,
            n,
            q,
            vec![Bound::Infinite; m as usize],
            vec![Bound::Infinite; n as usize],
        )
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn rows(&self) -> &[Bound] {
        &self.rows
    }

    pub fn cols(&self) -> &[Bound] {
        &self.cols
    }

    /// The transposed query (rows and columns exchanged), which always has the
    /// same count.
    pub fn transposed(&self) -> CountQuery {
        CountQuery {
            m: self.n,
            n: self.m,
            q: self.q,
            rows: self.cols.clone(),
            cols: self.rows.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct MemoKey {
    q: i64,
    rows: Vec<Bound>,
    cols: Vec<Bound>,
}

/// Memoizing evaluator for [`CountQuery`] values.
///
/// Results are cached under a canonical key: the query transposed so that the
/// row count does not exceed the column count, with finite bounds too large to
/// ever be active stored as infinity. Row and column order is preserved (the
/// staircase condition is not invariant under permuting lines).
#[derive(Debug, Default)]
pub struct Counter {
    memo: HashMap<MemoKey, BigUint>,
}

impl Counter {
    pub fn new() -> Self {
        Counter::default()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn count(&mut self, query: &CountQuery) -> BigUint {
        self.count_bounds(query.q as i64, &query.rows, &query.cols)
    }

    /// N_q with all bounds infinite: the Hilbert-Kunz function at q.
    pub fn hilbert_kunz(&mut self, m: u32, n: u32, q: u64) -> BigUint {
        assert!(
            m >= 1 && n >= 1 && q >= 1,
            "hilbert_kunz requires m, n, q >= 1"
        );
        self.count_bounds(
            q as i64,
            &vec![Bound::Infinite; m as usize],
            &vec![Bound::Infinite; n as usize],
        )
    }

    fn count_bounds(&mut self, q: i64, rows: &[Bound], cols: &[Bound]) -> BigUint {
        // A negative bound admits no exponent matrix at all.
        if rows.iter().chain(cols.iter()).any(|b| b.is_negative()) {
            return BigUint::zero();
        }
        // The empty matrix contributes exactly the trivial monomial.
        if rows.is_empty() || cols.is_empty() {
            return BigUint::one();
        }

        let key = canonicalize(q, rows, cols);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }

        let value = if key.rows.len() == 1 {
            single_row_count(q, key.rows[0], &key.cols)
        } else {
            self.split_first_column(q, &key.rows, &key.cols)
        };

        self.memo.insert(key, value.clone());
        value
    }

    /// The m >= 2 step: classify matrices by the topmost nonzero entry of the
    /// first column (pivot row, value j) and whether the first column reaches
    /// q, splitting each class into a first-column factor times a factor for
    /// the rows above-and-including the pivot over the remaining columns.
    fn split_first_column(&mut self, q: i64, rows: &[Bound], cols: &[Bound]) -> BigUint {
        let m = rows.len();

        // First column entirely zero.
        let mut total = self.count_bounds(q, rows, &cols[1..]);

        // First column sums to q or more: every row must then stay below q.
        // The pivot entry alone is at most q - 1, so the pivot cannot be the
        // last row.
        for pivot in 0..m - 1 {
            let j_max = rows[pivot].cap(q - 1);
            for j in 1..=j_max {
                let reach = self.count_bounds(q, &rows[pivot + 1..], &[cols[0].minus(j)]);
                let below = self.count_bounds(q, &rows[pivot + 1..], &[Bound::Finite(q - 1 - j)]);
                let column_ways = monus_big(&reach, &below);
                if column_ways.is_zero() {
                    continue;
                }
                let mut top_rows: Vec<Bound> = (0..pivot)
                    .map(|k| Bound::Finite(rows[k].cap(q - 1)))
                    .collect();
                top_rows.push(Bound::Finite(rows[pivot].cap(q - 1) - j));
                let top = self.count_bounds(q, &top_rows, &cols[1..]);
                total += column_ways * top;
            }
        }

        // First column below q; split on whether the pivot row reaches q.
        for pivot in 0..m {
            let j_max = rows[pivot].cap(q - 1);
            for j in 1..=j_max {
                let column_ways = self.count_bounds(
                    q,
                    &rows[pivot + 1..],
                    &[Bound::Finite(cols[0].cap(q - 1) - j)],
                );
                if column_ways.is_zero() {
                    continue;
                }

                // Pivot row reaches q: every column must stay below q.
                let capped_cols: Vec<Bound> = cols[1..]
                    .iter()
                    .map(|c| Bound::Finite(c.cap(q - 1)))
                    .collect();
                let mut rows_free: Vec<Bound> = rows[..pivot].to_vec();
                rows_free.push(rows[pivot].minus(j));
                let mut rows_below: Vec<Bound> = rows[..pivot].to_vec();
                rows_below.push(Bound::Finite(q - 1 - j));
                let reach = self.count_bounds(q, &rows_free, &capped_cols);
                let below = self.count_bounds(q, &rows_below, &capped_cols);
                total += &column_ways * monus_big(&reach, &below);

                // Neither the first column nor the pivot row reaches q.
                let mut rows_capped: Vec<Bound> = rows[..pivot].to_vec();
                rows_capped.push(Bound::Finite(rows[pivot].cap(q - 1) - j));
                let rest = self.count_bounds(q, &rows_capped, &cols[1..]);
                total += column_ways * rest;
            }
        }

        total
    }
}

fn canonicalize(q: i64, rows: &[Bound], cols: &[Bound]) -> MemoKey {
    let (rows, cols) = if rows.len() > cols.len() {
        (cols.to_vec(), rows.to_vec())
    } else {
        (rows.to_vec(), cols.to_vec())
    };
    let m = rows.len() as i128;
    let n = cols.len() as i128;
    // A finite bound beyond the largest achievable line sum is never active:
    // one family of line sums stays below q, so the opposite family's sums are
    // at most n(q-1) resp. m(q-1).
    let clamp = |bounds: Vec<Bound>, cap: i128| -> Vec<Bound> {
        bounds
            .into_iter()
            .map(|b| match b {
                Bound::Finite(v) if (v as i128) > cap => Bound::Infinite,
                other => other,
            })
            .collect()
    };
    let rows = clamp(rows, n * (q as i128 - 1));
    let cols = clamp(cols, m * (q as i128 - 1));
    MemoKey { q, rows, cols }
}

/// The 1×n case: exponent vectors (p_1, .., p_n) with p_j <= c_j and
/// p_1 + .. + p_n <= r, where either that total or every entry stays below q.
fn single_row_count(q: i64, row: Bound, cols: &[Bound]) -> BigUint {
    match row {
        // With no row cap, an entry at q would push the row sum to q as well,
        // so admissibility reduces to every entry below q, independently
        // capped by its column bound.
        Bound::Infinite => cols
            .iter()
            .map(|c| BigUint::from(c.plus_one_cap(q) as u64))
            .product(),
        Bound::Finite(r) => {
            let n = cols.len() as i64;
            if r < q && cols.iter().all(|c| c.at_least(r)) {
                // Column caps never bite: weak compositions of 0..r into n parts.
                return binom(r + n, n);
            }
            nested_row_sum(q, r, cols)
        }
    }
}

/// Direct nested summation over the first entry for the bounded-row case,
/// truncating each level at min(c_1, remaining, q-1).
fn nested_row_sum(q: i64, remaining: i64, cols: &[Bound]) -> BigUint {
    if cols.len() == 1 {
        let value = cols[0].plus_one_cap(q).min(remaining + 1);
        return BigUint::from(value.max(0) as u64);
    }
    let cap = cols[0].cap(remaining.min(q - 1));
    let mut total = BigUint::zero();
    for i in 0..=cap {
        total += nested_row_sum(q, remaining - i, &cols[1..]);
    }
    total
}

thread_local! {
    static SHARED_COUNTER: RefCell<Counter> = RefCell::new(Counter::new());
}

/// Evaluates a query against a per-thread shared memo cache.
pub fn count(query: &CountQuery) -> BigUint {
    SHARED_COUNTER.with(|c| c.borrow_mut().count(query))
}

/// The Hilbert-Kunz function value at q for the m×n case, using the
/// per-thread shared memo cache.
pub fn hilbert_kunz(m: u32, n: u32, q: u64) -> BigUint {
    SHARED_COUNTER.with(|c| c.borrow_mut().hilbert_kunz(m, n, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn fin(v: i64) -> Bound {
        Bound::Finite(v)
    }

    const INF: Bound = Bound::Infinite;

    fn run(m: u32, n: u32, q: u64, rows: Vec<Bound>, cols: Vec<Bound>) -> BigUint {
        count(&CountQuery::new(m, n, q, rows, cols).unwrap())
    }

    #[test]
    fn unbounded_single_row_is_q_power() {
        assert_eq!(run(1, 2, 3, vec![INF], vec![INF, INF]), nat(9));
        assert_eq!(run(1, 4, 2, vec![INF], vec![INF; 4]), nat(16));
    }

    #[test]
    fn bounded_single_row_shortcut() {
        // r < q and r below every column cap: C(r + n, n).
        assert_eq!(
            run(1, 3, 5, vec![fin(2)], vec![fin(4), fin(4), fin(4)]),
            nat(10)
        );
    }

    #[test]
    fn two_by_two_unbounded() {
        assert_eq!(run(2, 2, 2, vec![INF, INF], vec![INF, INF]), nat(10));
    }

    #[test]
    fn two_by_two_mixed_bounds() {
        // Hand enumeration over 0/1 exponent matrices with the staircase and
        // bound filters gives 7.
        assert_eq!(
            run(2, 2, 2, vec![INF, fin(1)], vec![fin(1), fin(1)]),
            nat(7)
        );
    }

    #[test]
    fn empty_matrix_counts_one() {
        assert_eq!(run(0, 3, 4, vec![], vec![fin(1), fin(2), INF]), nat(1));
    }

    #[test]
    fn negative_bound_counts_zero() {
        assert_eq!(run(2, 2, 3, vec![INF, INF], vec![fin(-1), INF]), nat(0));
        assert_eq!(run(1, 1, 1, vec![fin(-5)], vec![INF]), nat(0));
    }

    #[test]
    fn hilbert_kunz_examples() {
        assert_eq!(hilbert_kunz(2, 2, 2), nat(10));
        assert_eq!(hilbert_kunz(2, 3, 2), nat(23));
        assert_eq!(hilbert_kunz(3, 4, 1), nat(1));
    }

    #[test]
    fn q_one_unbounded_counts_one() {
        for m in 1..=4 {
            for n in 1..=4 {
                assert_eq!(hilbert_kunz(m, n, 1), nat(1), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn query_validation() {
        assert!(CountQuery::new(2, 2, 0, vec![INF, INF], vec![INF, INF]).is_err());
        assert!(CountQuery::new(2, 2, 2, vec![INF], vec![INF, INF]).is_err());
        assert!(CountQuery::new(2, 2, 2, vec![INF, INF], vec![INF, INF, INF]).is_err());
    }

    #[test]
    fn bound_parsing() {
        assert_eq!("inf".parse::<Bound>().unwrap(), INF);
        assert_eq!("7".parse::<Bound>().unwrap(), fin(7));
        assert_eq!("-1".parse::<Bound>().unwrap(), fin(-1));
        assert!("seven".parse::<Bound>().is_err());
    }

    #[test]
    fn transpose_symmetry_small_grid() {
        let bounds = [INF, fin(0), fin(1), fin(2)];
        for q in 1..=3u64 {
            for &r1 in &bounds {
                for &r2 in &bounds {
                    for &c1 in &bounds {
                        let query = CountQuery::new(2, 1, q, vec![r1, r2], vec![c1]).unwrap();
                        assert_eq!(count(&query), count(&query.transposed()));
                        let square = CountQuery::new(2, 2, q, vec![r1, r2], vec![c1, r1]).unwrap();
                        assert_eq!(count(&square), count(&square.transposed()));
                    }
                }
            }
        }
    }

    #[test]
    fn monotone_in_bounds_and_q() {
        // Raising one bound, or q, never decreases the count.
        let base = CountQuery::new(2, 2, 3, vec![fin(1), fin(2)], vec![fin(2), fin(1)]).unwrap();
        let base_count = count(&base);
        for i in 0..2usize {
            let mut rows = base.rows().to_vec();
            rows[i] = rows[i].minus(-1);
            let bumped = CountQuery::new(2, 2, 3, rows, base.cols().to_vec()).unwrap();
            assert!(count(&bumped) >= base_count);
            let mut rows = base.rows().to_vec();
            rows[i] = INF;
            let bumped = CountQuery::new(2, 2, 3, rows, base.cols().to_vec()).unwrap();
            assert!(count(&bumped) >= base_count);
        }
        let more_q = CountQuery::new(2, 2, 4, base.rows().to_vec(), base.cols().to_vec()).unwrap();
        assert!(count(&more_q) >= base_count);
    }

    #[test]
    fn clamping_oversized_bounds_is_invisible() {
        // A finite row bound above n(q-1) acts like infinity.
        let q = 3;
        let huge = fin(100);
        let clamped = run(2, 2, q, vec![INF, huge], vec![fin(2), INF]);
        let infinite = run(2, 2, q, vec![INF, INF], vec![fin(2), INF]);
        assert_eq!(clamped, infinite);
    }
}
