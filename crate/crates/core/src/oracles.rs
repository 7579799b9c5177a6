//! Independent ground truths for the counting recursion.
//!
//! Two routes that share no code with [`crate::counting`]:
//!
//! * [`brute_count`] — exhaustive depth-first enumeration of admissible
//!   exponent matrices, with incremental staircase and bound pruning;
//! * [`segre_length`] — the degree-sum formula over the two Segre factors,
//!   counting pairs (row-sum profile, column-sum profile) by total degree.
//!
//! [`brute_battery`] and [`segre_battery`] sweep both routes against the
//! recursion over parameter grids.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::binomial::{bigint_to_biguint, binom, binom_int, neg_one_pow};
use crate::counting::{Bound, CountQuery, Counter};
use crate::error::{Error, Result};

/// Default cap on the number of enumeration states (entries^cells before
/// pruning) a single brute-force count may visit.
pub const DEFAULT_ENUM_BUDGET: u64 = 100_000_000;

/// A dense m×n grid of nonnegative integer exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentMatrix {
    m: usize,
    n: usize,
    entries: Vec<u64>, // row-major
}

impl ExponentMatrix {
    pub fn new(m: usize, n: usize, entries: Vec<u64>) -> Result<Self> {
        if entries.len() != m * n {
            return Err(Error::InvalidArgument(format!(
                "a {m}x{n} matrix needs {} entries, got {}",
                m * n,
                entries.len()
            )));
        }
        Ok(ExponentMatrix { m, n, entries })
    }

    pub fn from_rows(rows: &[Vec<u64>]) -> Self {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == n), "ragged rows");
        ExponentMatrix {
            m,
            n,
            entries: rows.concat(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.n + j]
    }

    pub fn row_sum(&self, i: usize) -> u64 {
        (0..self.n).map(|j| self.get(i, j)).sum()
    }

    pub fn col_sum(&self, j: usize) -> u64 {
        (0..self.m).map(|i| self.get(i, j)).sum()
    }
}

/// Whether no two support cells sit in strict northwest-southeast relation,
/// i.e. p[i][j]·p[i'][j'] = 0 whenever i < i' and j < j'.
pub fn is_staircase(p: &ExponentMatrix) -> bool {
    for i in 0..p.m {
        for j in 0..p.n {
            if p.get(i, j) == 0 {
                continue;
            }
            for i2 in i + 1..p.m {
                for j2 in j + 1..p.n {
                    if p.get(i2, j2) != 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Whether all row sums are below q, or all column sums are below q.
pub fn satisfies_row_or_col(p: &ExponentMatrix, q: u64) -> bool {
    (0..p.m).all(|i| p.row_sum(i) < q) || (0..p.n).all(|j| p.col_sum(j) < q)
}

/// Exhaustively counts the matrices a [`CountQuery`] admits, using the default
/// enumeration budget.
pub fn brute_count(query: &CountQuery) -> Result<BigUint> {
    brute_count_with_budget(query, DEFAULT_ENUM_BUDGET)
}

/// Exhaustively counts the matrices a [`CountQuery`] admits.
///
/// Entries are enumerated over 0..q-1 only: one family of line sums must stay
/// below q, and every entry is bounded by both its row and its column sum, so
/// an entry of q or more cannot occur in an admissible matrix.
pub fn brute_count_with_budget(query: &CountQuery, budget: u64) -> Result<BigUint> {
    let m = query.m() as usize;
    let n = query.n() as usize;
    let q = query.q();
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument(
            "brute enumeration needs m, n >= 1".into(),
        ));
    }

    let states = (q as u128).checked_pow((m * n) as u32).unwrap_or(u128::MAX);
    if states > budget as u128 {
        return Err(Error::BudgetExceeded {
            required: states,
            budget,
        });
    }

    if query
        .rows()
        .iter()
        .chain(query.cols())
        .any(|b| b.is_negative())
    {
        return Ok(BigUint::zero());
    }

    let mut search = Search {
        n,
        m,
        q,
        rows: query.rows().to_vec(),
        cols: query.cols().to_vec(),
        row_sums: vec![0; m],
        col_sums: vec![0; n],
        rows_at_q: 0,
        cols_at_q: 0,
        found: 0,
    };
    search.fill_cell(0, 0, usize::MAX, usize::MAX);
    Ok(BigUint::from(search.found))
}

struct Search {
    m: usize,
    n: usize,
    q: u64,
    rows: Vec<Bound>,
    cols: Vec<Bound>,
    row_sums: Vec<u64>,
    col_sums: Vec<u64>,
    rows_at_q: usize,
    cols_at_q: usize,
    found: u128,
}

impl Search {
    /// Depth-first fill in row-major order. `above_min` is the smallest
    /// support column among rows strictly above the current one, `row_min`
    /// the smallest support column so far in the current row.
    fn fill_cell(&mut self, i: usize, j: usize, above_min: usize, row_min: usize) {
        if i == self.m {
            // Bounds held at every step and one line family stayed below q.
            self.found += 1;
            return;
        }
        let (next_i, next_j, next_above) = if j + 1 == self.n {
            (i + 1, 0, above_min.min(row_min))
        } else {
            (i, j + 1, above_min)
        };

        for v in 0..self.q {
            if v > 0 {
                // A nonzero entry here is staircase-compatible only if no
                // support above sits strictly to the left.
                if above_min < j {
                    break;
                }
                if !self.rows[i].at_least((self.row_sums[i] + v) as i64)
                    || !self.cols[j].at_least((self.col_sums[j] + v) as i64)
                {
                    break;
                }
            }

            let row_crossed = self.row_sums[i] < self.q && self.row_sums[i] + v >= self.q;
            let col_crossed = self.col_sums[j] < self.q && self.col_sums[j] + v >= self.q;
            if row_crossed {
                self.rows_at_q += 1;
            }
            if col_crossed {
                self.cols_at_q += 1;
            }
            // Once some row and some column both reach q, neither line family
            // can stay below q.
            if self.rows_at_q == 0 || self.cols_at_q == 0 {
                self.row_sums[i] += v;
                self.col_sums[j] += v;
                let new_row_min = if v > 0 { row_min.min(j) } else { row_min };
                self.fill_cell(next_i, next_j, next_above, new_row_min);
                self.row_sums[i] -= v;
                self.col_sums[j] -= v;
            }
            if row_crossed {
                self.rows_at_q -= 1;
            }
            if col_crossed {
                self.cols_at_q -= 1;
            }
        }
    }
}

/// The number of monomials in k[z_1, .., z_m] of total degree d.
pub fn alpha(m: u32, d: u64) -> BigUint {
    binom(d as i64 + m as i64 - 1, m as i64 - 1)
}

/// The number of monomials in k[z_1, .., z_m] of total degree d in which every
/// variable has degree below q, by inclusion-exclusion over the variables that
/// overshoot.
pub fn alpha_bounded(m: u32, d: u64, q: u64) -> BigUint {
    let mut sum = BigInt::zero();
    for k in 0..=m as u64 {
        let top = d as i128 - (k as i128) * (q as i128) + m as i128 - 1;
        if top < m as i128 - 1 {
            continue; // the binomial vanishes from here on
        }
        sum += neg_one_pow(k) * binom_int(m as i64, k as i64) * binom_int(top as i64, m as i64 - 1);
    }
    bigint_to_biguint(sum, "alpha_bounded")
}

/// The Hilbert-Kunz value at q computed over the Segre factors: pairs of a
/// degree-d monomial in m variables and one in n variables, where at least one
/// side keeps every variable degree below q.
pub fn segre_length(m: u32, n: u32, q: u64) -> BigUint {
    assert!(
        m >= 1 && n >= 1 && q >= 1,
        "segre_length requires m, n, q >= 1"
    );
    let mut free_rows = BigInt::zero();
    for d in 0..=(q - 1) * n as u64 {
        free_rows += BigInt::from(alpha(m, d) * alpha_bounded(n, d, q));
    }
    let mut free_cols = BigInt::zero();
    let mut both = BigInt::zero();
    for d in 0..=(q - 1) * m as u64 {
        free_cols += BigInt::from(alpha(n, d) * alpha_bounded(m, d, q));
        both += BigInt::from(alpha_bounded(n, d, q) * alpha_bounded(m, d, q));
    }
    bigint_to_biguint(free_rows + free_cols - both, "segre_length")
}

/// One disagreement between the recursion and an oracle.
#[derive(Debug, Clone)]
pub struct OracleMismatch {
    pub query: CountQuery,
    pub oracle: BigUint,
    pub recursion: BigUint,
}

/// Result of sweeping an oracle against the recursion.
#[derive(Debug, Clone)]
pub struct BatteryOutcome {
    pub cases: u64,
    pub mismatch: Option<OracleMismatch>,
}

impl BatteryOutcome {
    pub fn pass(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// splitmix64; a tiny, stable generator so the random battery is reproducible
/// without pulling in an RNG dependency.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn bound_below(&mut self, q: u64) -> Bound {
        // uniform over {0, .., q-1, infinity}
        let pick = self.next() % (q + 1);
        if pick == q {
            Bound::Infinite
        } else {
            Bound::Finite(pick as i64)
        }
    }
}

/// Sweeps [`brute_count`] against the recursion for all m, n <= max_mn and
/// q <= max_q, over the all-infinite bounds, all bounds q-1, every single
/// bound set to 0, 1, or q-1 with the rest infinite, and 50 seeded random
/// bound vectors per shape.
pub fn brute_battery(max_mn: u32, max_q: u64, seed: u64, budget: u64) -> Result<BatteryOutcome> {
    if max_mn == 0 || max_q == 0 {
        return Err(Error::InvalidArgument(
            "battery needs max_mn, max_q >= 1".into(),
        ));
    }
    // Refuse up front if the largest instance cannot be enumerated.
    let worst = (max_q as u128)
        .checked_pow(max_mn * max_mn)
        .unwrap_or(u128::MAX);
    if worst > budget as u128 {
        return Err(Error::BudgetExceeded {
            required: worst,
            budget,
        });
    }

    let mut rng = SplitMix64(seed);
    let mut counter = Counter::new();
    let mut cases = 0;
    for m in 1..=max_mn {
        for n in 1..=max_mn {
            for q in 1..=max_q {
                let mut queries: Vec<CountQuery> = Vec::new();
                let inf_rows = vec![Bound::Infinite; m as usize];
                let inf_cols = vec![Bound::Infinite; n as usize];
                queries.push(CountQuery::new(
                    m,
                    n,
                    q,
                    inf_rows.clone(),
                    inf_cols.clone(),
                )?);
                queries.push(CountQuery::new(
                    m,
                    n,
                    q,
                    vec![Bound::Finite(q as i64 - 1); m as usize],
                    vec![Bound::Finite(q as i64 - 1); n as usize],
                )?);
                for slot in 0..(m + n) as usize {
                    for value in [0, 1, q as i64 - 1] {
                        let mut rows = inf_rows.clone();
                        let mut cols = inf_cols.clone();
                        if slot < m as usize {
                            rows[slot] = Bound::Finite(value);
                        } else {
                            cols[slot - m as usize] = Bound::Finite(value);
                        }
                        queries.push(CountQuery::new(m, n, q, rows, cols)?);
                    }
                }
                for _ in 0..50 {
                    let rows = (0..m).map(|_| rng.bound_below(q)).collect();
                    let cols = (0..n).map(|_| rng.bound_below(q)).collect();
                    queries.push(CountQuery::new(m, n, q, rows, cols)?);
                }

                for query in queries {
                    cases += 1;
                    let oracle = brute_count_with_budget(&query, budget)?;
                    let recursion = counter.count(&query);
                    if oracle != recursion {
                        return Ok(BatteryOutcome {
                            cases,
                            mismatch: Some(OracleMismatch {
                                query,
                                oracle,
                                recursion,
                            }),
                        });
                    }
                }
            }
        }
    }
    Ok(BatteryOutcome {
        cases,
        mismatch: None,
    })
}

/// Sweeps [`segre_length`] against the recursion for all m, n <= max_mn,
/// q <= max_q with unbounded queries.
pub fn segre_battery(max_mn: u32, max_q: u64) -> BatteryOutcome {
    let mut counter = Counter::new();
    let mut cases = 0;
    for m in 1..=max_mn {
        for n in 1..=max_mn {
            for q in 1..=max_q {
                cases += 1;
                let oracle = segre_length(m, n, q);
                let recursion = counter.hilbert_kunz(m, n, q);
                if oracle != recursion {
                    let query = CountQuery::unbounded(m, n, q).expect("valid shape");
                    return BatteryOutcome {
                        cases,
                        mismatch: Some(OracleMismatch {
                            query,
                            oracle,
                            recursion,
                        }),
                    };
                }
            }
        }
    }
    BatteryOutcome {
        cases,
        mismatch: None,
    }
}
