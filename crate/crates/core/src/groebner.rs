//! A miniature Gröbner workbench for the ideal generated by the 2×2 minors of
//! the generic m×n matrix together with the q-th powers of all variables.
//!
//! Under any diagonal order (one whose leading term of every 2×2 minor is the
//! diagonal product) that ideal has a predicted minimal reduced Gröbner basis:
//! all q-stair monomials plus all 2×2 minors. This module constructs that
//! basis under the diagonal lexicographic order, checks Buchberger's
//! criterion on it pair by pair, and counts the standard monomials — which
//! must reproduce the Hilbert-Kunz value, giving a third independent oracle
//! for the counting recursion.
//!
//! Coefficients are exact rationals. Every polynomial in play here has ±1
//! coefficients, so no coefficient growth occurs, but the representation
//! stays general.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::binomial::binom;
use crate::error::{Error, Result};
use crate::oracles::ExponentMatrix;

/// Default cap on the number of q-stair descriptors a basis construction may
/// expand.
pub const DEFAULT_STAIR_BUDGET: u64 = 1_000_000;

/// Default cap on the number of S-pairs a verification may examine.
pub const DEFAULT_PAIR_BUDGET: u64 = 10_000_000;

/// A variable x(i, j) of the generic matrix; indices are 0-based internally
/// and displayed 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarIndex {
    pub row: u32,
    pub col: u32,
}

impl VarIndex {
    pub fn new(row: u32, col: u32) -> Self {
        VarIndex { row, col }
    }
}

impl fmt::Display for VarIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x({},{})", self.row + 1, self.col + 1)
    }
}

/// A monomial in the matrix variables: sparse exponent map, no zero exponents
/// stored.
///
/// `Ord` is the diagonal lexicographic order: variables are ranked
/// x(1,1) > x(1,2) > ... > x(1,n) > x(2,1) > ... > x(m,n), and monomials
/// compare lexicographically in that ranking.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: BTreeMap<VarIndex, u64>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarIndex, exp: u64) -> Self {
        let mut exps = BTreeMap::new();
        if exp > 0 {
            exps.insert(v, exp);
        }
        Monomial { exps }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarIndex, u64)>) -> Self {
        let mut exps = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *exps.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: VarIndex) -> u64 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarIndex, u64)> + '_ {
        self.exps.iter().map(|(&v, &e)| (v, e))
    }

    pub fn degree(&self) -> u64 {
        self.exps.values().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            *exps.entry(v).or_insert(0) += e;
        }
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|(v, &e)| other.exponent(*v) >= e)
    }

    /// other / self, when self divides other.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = other.exps.clone();
        for (v, &e) in &self.exps {
            let slot = exps.get_mut(v).expect("divisor support is contained");
            *slot -= e;
            if *slot == 0 {
                exps.remove(v);
            }
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            let slot = exps.entry(v).or_insert(0);
            *slot = (*slot).max(e);
        }
        Monomial { exps }
    }

    pub fn coprime_with(&self, other: &Monomial) -> bool {
        self.exps.keys().all(|v| other.exponent(*v) == 0)
    }

    /// The dense exponent grid of this monomial inside an m×n matrix.
    pub fn to_exponent_matrix(&self, m: u32, n: u32) -> ExponentMatrix {
        let mut entries = vec![0u64; (m * n) as usize];
        for (v, e) in self.iter() {
            assert!(
                v.row < m && v.col < n,
                "variable {v} outside the {m}x{n} grid"
            );
            entries[(v.row * n + v.col) as usize] = e;
        }
        ExponentMatrix::new(m as usize, n as usize, entries).expect("consistent shape")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // Walk both supports in ascending variable index, i.e. from the most
        // significant variable down. The first position where the exponents
        // differ decides; a variable missing on one side counts as zero.
        let mut left = self.exps.iter().peekable();
        let mut right = other.exps.iter().peekable();
        loop {
            match (left.peek(), right.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(lv, le)), Some(&(rv, re))) => match lv.cmp(rv) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if le != re {
                            return le.cmp(re);
                        }
                        left.next();
                        right.next();
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, e) in self.iter() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// The diagonal lexicographic monomial order. Construction for a grid asserts
/// the defining property: the leading monomial of every 2×2 minor is its
/// diagonal product.
#[derive(Debug, Clone, Copy)]
pub struct DiagonalLexOrder;

impl DiagonalLexOrder {
    pub fn for_grid(m: u32, n: u32) -> Self {
        for a in 0..m {
            for a2 in a + 1..m {
                for b in 0..n {
                    for b2 in b + 1..n {
                        let diag = Monomial::from_pairs([
                            (VarIndex::new(a, b), 1),
                            (VarIndex::new(a2, b2), 1),
                        ]);
                        let anti = Monomial::from_pairs([
                            (VarIndex::new(a2, b), 1),
                            (VarIndex::new(a, b2), 1),
                        ]);
                        assert!(
                            diag > anti,
                            "diagonal order violated at rows {a},{a2} cols {b},{b2}"
                        );
                    }
                }
            }
        }
        DiagonalLexOrder
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.cmp(b)
    }
}

/// A multivariate polynomial with exact rational coefficients: monomials map
/// to nonzero coefficients, ordered so the leading term is the last entry.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TermPolynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl TermPolynomial {
    pub fn zero() -> Self {
        TermPolynomial::default()
    }

    /// The monic polynomial with a single term.
    pub fn from_monomial(monomial: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(monomial, BigRational::one());
        TermPolynomial { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut poly = TermPolynomial::zero();
        for (m, c) in pairs {
            poly.add_term(m, c);
        }
        poly
    }

    fn add_term(&mut self, monomial: Monomial, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// The leading term under the diagonal lex order.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// The terms other than the leading one.
    pub fn trailing_terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev().skip(1)
    }

    /// self - factor · shift · other.
    pub fn sub_scaled(
        &self,
        other: &TermPolynomial,
        factor: &BigRational,
        shift: &Monomial,
    ) -> TermPolynomial {
        let mut result = self.clone();
        for (m, c) in &other.terms {
            result.add_term(shift.mul(m), -(factor * c));
        }
        result
    }
}

impl fmt::Display for TermPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if first {
                if c == &-BigRational::one() {
                    write!(f, "-")?;
                } else if !c.is_one() {
                    write!(f, "{c}*")?;
                }
                first = false;
            } else if c == &-BigRational::one() {
                write!(f, " - ")?;
            } else if c < &BigRational::zero() {
                write!(f, " - {}*", -c)?;
            } else if c.is_one() {
                write!(f, " + ")?;
            } else {
                write!(f, " + {c}*")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// All 2×2 minors x(a,b)·x(a',b') - x(a',b)·x(a,b') with a < a', b < b',
/// enumerated in row-major pivot order. Empty when m < 2 or n < 2.
pub fn minors(m: u32, n: u32) -> Vec<TermPolynomial> {
    let mut result = Vec::new();
    for a in 0..m {
        for a2 in a + 1..m {
            for b in 0..n {
                for b2 in b + 1..n {
                    let diag = Monomial::from_pairs([
                        (VarIndex::new(a, b), 1),
                        (VarIndex::new(a2, b2), 1),
                    ]);
                    let anti = Monomial::from_pairs([
                        (VarIndex::new(a2, b), 1),
                        (VarIndex::new(a, b2), 1),
                    ]);
                    result.push(TermPolynomial::from_terms([
                        (diag, BigRational::one()),
                        (anti, -BigRational::one()),
                    ]));
                }
            }
        }
    }
    result
}

/// The two shapes a stair support can take around its pivot (c, d): the row
/// arm to the right with the column arm below, or the row arm to the left
/// with the column arm above. Any other corner would put a support pair in
/// northwest-southeast relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StairConfig {
    RowRightColDown,
    RowLeftColUp,
}

/// One generated q-stair shape: exponents along a row arm and a column arm
/// through a pivot, with both pivot line sums equal to q.
#[derive(Debug, Clone)]
pub struct QStairDescriptor {
    pub pivot: VarIndex,
    pub q: u64,
    pub config: StairConfig,
    pub pivot_exp: u64,
    /// Exponents on the row arm, outward from the pivot.
    pub row_arm: Vec<u64>,
    /// Exponents on the column arm, outward from the pivot.
    pub col_arm: Vec<u64>,
}

impl QStairDescriptor {
    pub fn monomial(&self) -> Monomial {
        let (c, d) = (self.pivot.row, self.pivot.col);
        let mut pairs = vec![(self.pivot, self.pivot_exp)];
        for (t, &e) in self.row_arm.iter().enumerate() {
            let col = match self.config {
                StairConfig::RowRightColDown => d + 1 + t as u32,
                StairConfig::RowLeftColUp => d - 1 - t as u32,
            };
            pairs.push((VarIndex::new(c, col), e));
        }
        for (t, &e) in self.col_arm.iter().enumerate() {
            let row = match self.config {
                StairConfig::RowRightColDown => c + 1 + t as u32,
                StairConfig::RowLeftColUp => c - 1 - t as u32,
            };
            pairs.push((VarIndex::new(row, d), e));
        }
        Monomial::from_pairs(pairs)
    }
}

/// All vectors of `cells` nonnegative integers summing to `total`.
fn compositions(total: u64, cells: usize) -> Vec<Vec<u64>> {
    if cells == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut result = Vec::new();
    for head in 0..=total {
        for mut tail in compositions(total - head, cells - 1) {
            tail.insert(0, head);
            result.push(tail);
        }
    }
    result
}

/// The number of q-stair descriptors for the grid, before deduplication by
/// monomial identity. Used for budget checks.
pub fn stair_descriptor_count(m: u32, n: u32, q: u64) -> BigUint {
    let mut total = BigUint::zero();
    for c in 0..m {
        for d in 0..n {
            for (row_cells, col_cells) in [(n - 1 - d, m - 1 - c), (d, c)]
            // right/down arms, then left/up arms
            {
                for p in 0..=q {
                    let rest = (q - p) as i64;
                    total += binom(rest + row_cells as i64 - 1, row_cells as i64 - 1)
                        * binom(rest + col_cells as i64 - 1, col_cells as i64 - 1);
                }
            }
        }
    }
    total
}

/// The minimal set of q-stair monomials of the grid.
///
/// A q-stair is a staircase monomial whose support lies on a row arm and a
/// column arm through some pivot (c, d), with both pivot line sums exactly q.
/// The two arm configurations overlap on pure powers; duplicates are removed
/// by monomial identity. A q-stair that is a proper multiple of another
/// q-stair (it carries a full q-th power of a variable without being that
/// pure power) generates nothing new and is dropped, so the returned set is
/// the minimal generating set of the stair ideal — the one a reduced Gröbner
/// basis must consist of.
pub fn generate_q_stairs(m: u32, n: u32, q: u64) -> Result<BTreeSet<Monomial>> {
    generate_q_stairs_with_budget(m, n, q, DEFAULT_STAIR_BUDGET)
}

pub fn generate_q_stairs_with_budget(
    m: u32,
    n: u32,
    q: u64,
    budget: u64,
) -> Result<BTreeSet<Monomial>> {
    if m == 0 || n == 0 || q == 0 {
        return Err(Error::InvalidArgument(
            "stair generation needs m, n, q >= 1".into(),
        ));
    }
    let descriptors = stair_descriptor_count(m, n, q);
    if descriptors > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            required: u128::try_from(&descriptors).unwrap_or(u128::MAX),
            budget,
        });
    }

    let mut stairs = BTreeSet::new();
    for c in 0..m {
        for d in 0..n {
            for config in [StairConfig::RowRightColDown, StairConfig::RowLeftColUp] {
                let (row_cells, col_cells) = match config {
                    StairConfig::RowRightColDown => (n - 1 - d, m - 1 - c),
                    StairConfig::RowLeftColUp => (d, c),
                };
                for pivot_exp in 0..=q {
                    let rest = q - pivot_exp;
                    let row_fills = compositions(rest, row_cells as usize);
                    if row_fills.is_empty() {
                        continue;
                    }
                    let col_fills = compositions(rest, col_cells as usize);
                    for row_arm in &row_fills {
                        for col_arm in &col_fills {
                            let descriptor = QStairDescriptor {
                                pivot: VarIndex::new(c, d),
                                q,
                                config,
                                pivot_exp,
                                row_arm: row_arm.clone(),
                                col_arm: col_arm.clone(),
                            };
                            stairs.insert(descriptor.monomial());
                        }
                    }
                }
            }
        }
    }

    // Interreduce. Divisibility among distinct q-stairs always passes
    // through a pure power x(i,j)^q (the divisor's pivot lines collapse to a
    // single cell of the multiple), so the redundant stairs are exactly those
    // carrying a full q-th power on more than one support cell. All pure
    // powers are themselves generated, so dropping these changes nothing.
    let redundant: Vec<Monomial> = stairs
        .iter()
        .filter(|s| s.iter().any(|(_, e)| e >= q) && s.iter().count() > 1)
        .cloned()
        .collect();
    for monomial in redundant {
        stairs.remove(&monomial);
    }
    Ok(stairs)
}

/// Remainder of multivariate division of f by the basis: no term of the
/// result is divisible by any leading monomial of the basis.
///
/// Deterministic divisor choice: among basis elements whose leading monomial
/// divides the current term, the one with the largest leading monomial wins,
/// and the lowest basis index among equals.
pub fn reduce(
    f: &TermPolynomial,
    basis: &[TermPolynomial],
    order: &DiagonalLexOrder,
) -> TermPolynomial {
    let mut remainder = TermPolynomial::zero();
    let mut work = f.clone();
    'outer: while let Some((lm, lc)) = work.leading() {
        let lm = lm.clone();
        let lc = lc.clone();

        let mut best: Option<(usize, &Monomial, &BigRational)> = None;
        for (index, g) in basis.iter().enumerate() {
            let (g_lm, g_lc) = g.leading().expect("basis elements are nonzero");
            if !g_lm.divides(&lm) {
                continue;
            }
            let better = match &best {
                None => true,
                Some((_, best_lm, _)) => order.cmp(g_lm, best_lm) == Ordering::Greater,
            };
            if better {
                best = Some((index, g_lm, g_lc));
            }
        }

        if let Some((index, g_lm, g_lc)) = best {
            let shift = g_lm.divide_into(&lm).expect("divisibility just checked");
            let factor = lc / g_lc;
            work = work.sub_scaled(&basis[index], &factor, &shift);
            continue 'outer;
        }

        // No divisor: the leading term is part of the normal form.
        work.terms.remove(&lm);
        remainder.add_term(lm, lc);
    }
    remainder
}

/// The S-polynomial of f and g: the combination canceling both leading terms.
pub fn s_polynomial(f: &TermPolynomial, g: &TermPolynomial) -> TermPolynomial {
    let (f_lm, f_lc) = f.leading().expect("nonzero f");
    let (g_lm, g_lc) = g.leading().expect("nonzero g");
    let lcm = f_lm.lcm(g_lm);
    let f_shift = f_lm.divide_into(&lcm).expect("lcm is a multiple");
    let g_shift = g_lm.divide_into(&lcm).expect("lcm is a multiple");
    TermPolynomial::zero()
        .sub_scaled(f, &(-BigRational::one() / f_lc), &f_shift)
        .sub_scaled(g, &(BigRational::one() / g_lc), &g_shift)
}

/// The outcome of checking Buchberger's criterion on the predicted basis.
#[derive(Debug, Clone)]
pub struct GroebnerReport {
    pub stair_count: usize,
    pub minor_count: usize,
    pub pairs_total: u64,
    /// Pairs of monomials: their S-polynomial is identically zero.
    pub pairs_monomial: u64,
    /// Pairs with coprime leading monomials, skipped by Buchberger's first
    /// criterion.
    pub pairs_coprime: u64,
    pub pairs_reduced: u64,
    pub minimal: bool,
    pub reduced: bool,
    /// Descriptions of failing pairs, in pair-index order.
    pub failures: Vec<String>,
}

impl GroebnerReport {
    pub fn pass(&self) -> bool {
        self.minimal && self.reduced && self.failures.is_empty()
    }
}

/// Builds the predicted basis (q-stair monomials plus minors) and verifies it
/// is a minimal reduced Gröbner basis: every S-polynomial of a basis pair
/// reduces to zero, no leading monomial divides another, and no trailing term
/// of a minor is divisible by any leading monomial.
pub fn verify_groebner(m: u32, n: u32, q: u64) -> Result<GroebnerReport> {
    verify_groebner_with_budget(m, n, q, DEFAULT_STAIR_BUDGET, DEFAULT_PAIR_BUDGET)
}

pub fn verify_groebner_with_budget(
    m: u32,
    n: u32,
    q: u64,
    stair_budget: u64,
    pair_budget: u64,
) -> Result<GroebnerReport> {
    let order = DiagonalLexOrder::for_grid(m, n);
    let stairs = generate_q_stairs_with_budget(m, n, q, stair_budget)?;

    // At q = 1 every variable is a 1-stair, so the minors are absorbed by the
    // stair ideal and the reduced basis omits them. For q >= 2 no stair can
    // divide a minor's squarefree leading term and the filter keeps all.
    let minor_polys: Vec<TermPolynomial> = minors(m, n)
        .into_iter()
        .filter(|minor| {
            let (lm, _) = minor.leading().expect("minors are nonzero");
            !stairs.iter().any(|s| s.divides(lm))
        })
        .collect();

    let mut basis: Vec<TermPolynomial> = stairs
        .iter()
        .cloned()
        .map(TermPolynomial::from_monomial)
        .collect();
    basis.extend(minor_polys.iter().cloned());

    let size = basis.len() as u64;
    let pairs_total = size * (size - 1) / 2;
    if pairs_total > pair_budget {
        return Err(Error::BudgetExceeded {
            required: pairs_total as u128,
            budget: pair_budget,
        });
    }

    let mut report = GroebnerReport {
        stair_count: stairs.len(),
        minor_count: minor_polys.len(),
        pairs_total,
        pairs_monomial: 0,
        pairs_coprime: 0,
        pairs_reduced: 0,
        minimal: true,
        reduced: true,
        failures: Vec::new(),
    };

    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let f = &basis[i];
            let g = &basis[j];
            if f.len() == 1 && g.len() == 1 {
                // S(f, g) of two monomials cancels completely.
                report.pairs_monomial += 1;
                continue;
            }
            let (f_lm, _) = f.leading().unwrap();
            let (g_lm, _) = g.leading().unwrap();
            if f_lm.coprime_with(g_lm) {
                report.pairs_coprime += 1;
                continue;
            }
            let normal_form = reduce(&s_polynomial(f, g), &basis, &order);
            report.pairs_reduced += 1;
            if !normal_form.is_zero() {
                report.failures.push(format!(
                    "S-polynomial of pair ({i}, {j}) reduces to {normal_form}"
                ));
            }
        }
    }

    // Minimality: no leading monomial divides another.
    'minimal: for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i == j {
                continue;
            }
            let (lm_i, _) = basis[i].leading().unwrap();
            let (lm_j, _) = basis[j].leading().unwrap();
            if lm_i.divides(lm_j) {
                report.minimal = false;
                report.failures.push(format!(
                    "leading monomial {lm_i} divides leading monomial {lm_j}"
                ));
                break 'minimal;
            }
        }
    }

    // Reducedness: no trailing term of a minor is divisible by any leading
    // monomial (the stairs are single terms and have no trailing part).
    'reduced: for minor in &minor_polys {
        for (trailing, _) in minor.trailing_terms() {
            for g in &basis {
                let (lm, _) = g.leading().unwrap();
                if lm.divides(trailing) {
                    report.reduced = false;
                    report.failures.push(format!(
                        "trailing term {trailing} of {minor} is divisible by {lm}"
                    ));
                    break 'reduced;
                }
            }
        }
    }

    Ok(report)
}

/// Counts the monomials not divisible by any leading monomial of the
/// predicted basis. Exponents at q or above are excluded by the pure-power
/// stairs, so the enumeration ranges over exponents 0..q-1 per cell.
pub fn standard_monomial_count(m: u32, n: u32, q: u64) -> Result<BigUint> {
    standard_monomial_count_with_budget(
        m,
        n,
        q,
        DEFAULT_STAIR_BUDGET,
        crate::oracles::DEFAULT_ENUM_BUDGET,
    )
}

pub fn standard_monomial_count_with_budget(
    m: u32,
    n: u32,
    q: u64,
    stair_budget: u64,
    enum_budget: u64,
) -> Result<BigUint> {
    let cells = (m * n) as usize;
    let states = (q as u128).checked_pow(cells as u32).unwrap_or(u128::MAX);
    if states > enum_budget as u128 {
        return Err(Error::BudgetExceeded {
            required: states,
            budget: enum_budget,
        });
    }
    let stairs = generate_q_stairs_with_budget(m, n, q, stair_budget)?;

    // Dense leading-monomial exponent grids for fast divisibility checks.
    let mut leading: Vec<Vec<u64>> = Vec::new();
    for stair in &stairs {
        let mut dense = vec![0u64; cells];
        for (v, e) in stair.iter() {
            dense[(v.row * n + v.col) as usize] = e;
        }
        leading.push(dense);
    }
    for minor in minors(m, n) {
        let (lm, _) = minor.leading().expect("minors are nonzero");
        let mut dense = vec![0u64; cells];
        for (v, e) in lm.iter() {
            dense[(v.row * n + v.col) as usize] = e;
        }
        leading.push(dense);
    }

    let mut count = BigUint::zero();
    let mut candidate = vec![0u64; cells];
    loop {
        let standard = leading
            .iter()
            .all(|lm| !lm.iter().zip(&candidate).all(|(l, c)| l <= c));
        if standard {
            count += 1u32;
        }

        // Odometer step over exponents 0..q-1 per cell.
        let mut cell = 0;
        loop {
            if cell == cells {
                return Ok(count);
            }
            candidate[cell] += 1;
            if candidate[cell] < q {
                break;
            }
            candidate[cell] = 0;
            cell += 1;
        }
    }
}
