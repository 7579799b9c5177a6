//! Exact computation of generalized Hilbert-Kunz functions for the quotient of
//! a polynomial ring in the entries of a generic m×n matrix by the ideal of
//! its 2×2 minors.
//!
//! The value at a positive integer q is the length of the quotient by the
//! q-th powers of all variables, computed here as the number of staircase
//! exponent matrices in which every row sum or every column sum stays below q.
//! The crate provides:
//!
//! * [`counting`] — the bounded staircase count N_q(m, n; row caps; column
//!   caps) via a memoized first-column recursion; [`hilbert_kunz`] is the
//!   all-unbounded special case.
//! * [`oracles`] — two independent ground truths (exhaustive enumeration and
//!   a Segre-factor degree sum) plus sweep batteries against the recursion.
//! * [`closed_forms`] — the 2×n closed-form counts, polynomials, and
//!   multiplicities, evaluated exactly.
//! * [`groebner`] — a miniature Gröbner workbench: the predicted basis
//!   (q-stair monomials plus 2×2 minors) under the diagonal lex order,
//!   S-pair verification, and standard-monomial counting as a third oracle.
//! * [`fit`] — exact Newton interpolation recovering the Hilbert-Kunz
//!   polynomial in q and its leading coefficient, the Hilbert-Kunz
//!   multiplicity.
//! * [`binomial`] — arbitrary-precision combinatorial primitives and the
//!   binomial summation identities the closed forms rest on, as checkable
//!   operations.
//!
//! The `hkdet` binary exposes all of this on the command line with plain,
//! JSON, and CSV output.

pub mod binomial;
pub mod cli;
pub mod closed_forms;
pub mod counting;
pub mod error;
pub mod fit;
pub mod groebner;
pub mod oracles;
pub mod polynomial;

pub use counting::{count, hilbert_kunz, Bound, CountQuery, Counter};
pub use error::{Error, Result};
pub use polynomial::RationalPolynomial;
