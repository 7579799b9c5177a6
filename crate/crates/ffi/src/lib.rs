//! C ABI for the hkdet library.
//!
//! Conventions:
//!
//! * Every fallible call returns an [`HkStatus`]; results come back through
//!   out parameters, which are written only on `Ok`.
//! * Counts and coefficients travel as decimal strings — the values overflow
//!   fixed-width integers quickly. Strings returned by this library must be
//!   released with [`hkdet_string_free`].
//! * Row/column bounds are `int64_t` arrays; the sentinel
//!   [`HKDET_BOUND_INFINITE`] (`INT64_MAX`) means unbounded, and a null array
//!   pointer means every bound is infinite.
//! * Polynomials are opaque handles released with [`hkdet_poly_free`].
//! * A zero `budget` argument selects the library default.

use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use hkdet::counting::{Bound, CountQuery};
use hkdet::{counting, fit, groebner, oracles, Error, RationalPolynomial};

/// Bound value meaning "no cap" (INT64_MAX).
pub const HKDET_BOUND_INFINITE: i64 = i64::MAX;

/// Result of an FFI call. `Ok` means the out parameters were written; any
/// other value leaves them untouched.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    BudgetExceeded = 3,
    /// An exactness check failed; this indicates a defect, not bad input.
    VerificationFailed = 4,
    Internal = 5,
}

/// Opaque handle to a polynomial in q with exact rational coefficients.
pub struct HkPolynomial {
    inner: RationalPolynomial,
}

fn status_of(err: &Error) -> HkStatus {
    match err {
        Error::InvalidArgument(_) => HkStatus::InvalidArgument,
        Error::BudgetExceeded { .. } => HkStatus::BudgetExceeded,
        Error::InterpolationMismatch { .. } => HkStatus::VerificationFailed,
    }
}

fn guarded(body: impl FnOnce() -> HkStatus) -> HkStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(HkStatus::Internal)
}

/// Writes `text` as a freshly allocated C string into `out`.
unsafe fn write_string(out: *mut *mut c_char, text: String) -> HkStatus {
    match CString::new(text) {
        Ok(owned) => {
            *out = owned.into_raw();
            HkStatus::Ok
        }
        Err(_) => HkStatus::Internal,
    }
}

unsafe fn read_bounds(
    ptr: *const i64,
    len: usize,
    expected: usize,
) -> Result<Vec<Bound>, HkStatus> {
    if ptr.is_null() {
        return Ok(vec![Bound::Infinite; expected]);
    }
    if len != expected {
        return Err(HkStatus::InvalidArgument);
    }
    let raw = std::slice::from_raw_parts(ptr, len);
    Ok(raw
        .iter()
        .map(|&v| {
            if v == HKDET_BOUND_INFINITE {
                Bound::Infinite
            } else {
                Bound::Finite(v)
            }
        })
        .collect())
}

/// Frees a string allocated by this library. Null is ignored.
///
/// # Safety
/// `s` must have been returned by an hkdet function and not freed before.
#[no_mangle]
pub unsafe extern "C" fn hkdet_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The bounded staircase-monomial count N_q(m, n; rows; cols) as a decimal
/// string.
///
/// # Safety
/// `rows`/`cols` must be null or point to `rows_len`/`cols_len` readable
/// values; `out_count` must be a valid destination pointer.
#[no_mangle]
pub unsafe extern "C" fn hkdet_count(
    m: u32,
    n: u32,
    q: u64,
    rows: *const i64,
    rows_len: usize,
    cols: *const i64,
    cols_len: usize,
    out_count: *mut *mut c_char,
) -> HkStatus {
    if out_count.is_null() {
        return HkStatus::NullPointer;
    }
    let rows = match read_bounds(rows, rows_len, m as usize) {
        Ok(b) => b,
        Err(status) => return status,
    };
    let cols = match read_bounds(cols, cols_len, n as usize) {
        Ok(b) => b,
        Err(status) => return status,
    };
    guarded(
        || match CountQuery::new(m, n, q, rows.clone(), cols.clone()) {
            Ok(query) => write_string(out_count, counting::count(&query).to_string()),
            Err(err) => status_of(&err),
        },
    )
}

/// The Hilbert-Kunz function value at q (all bounds infinite) as a decimal
/// string.
///
/// # Safety
/// `out_count` must be a valid destination pointer.
#[no_mangle]
pub unsafe extern "C" fn hkdet_hilbert_kunz(
    m: u32,
    n: u32,
    q: u64,
    out_count: *mut *mut c_char,
) -> HkStatus {
    if out_count.is_null() {
        return HkStatus::NullPointer;
    }
    if m == 0 || n == 0 || q == 0 {
        return HkStatus::InvalidArgument;
    }
    guarded(|| write_string(out_count, counting::hilbert_kunz(m, n, q).to_string()))
}

/// The same value computed over the Segre factors, as a decimal string.
///
/// # Safety
/// `out_count` must be a valid destination pointer.
#[no_mangle]
pub unsafe extern "C" fn hkdet_segre_length(
    m: u32,
    n: u32,
    q: u64,
    out_count: *mut *mut c_char,
) -> HkStatus {
    if out_count.is_null() {
        return HkStatus::NullPointer;
    }
    if m == 0 || n == 0 || q == 0 {
        return HkStatus::InvalidArgument;
    }
    guarded(|| write_string(out_count, oracles::segre_length(m, n, q).to_string()))
}

/// The same count by exhaustive enumeration (the brute oracle).
///
/// # Safety
/// Pointer arguments as in [`hkdet_count`].
#[no_mangle]
pub unsafe extern "C" fn hkdet_brute_count(
    m: u32,
    n: u32,
    q: u64,
    rows: *const i64,
    rows_len: usize,
    cols: *const i64,
    cols_len: usize,
    budget: u64,
    out_count: *mut *mut c_char,
) -> HkStatus {
    if out_count.is_null() {
        return HkStatus::NullPointer;
    }
    let rows = match read_bounds(rows, rows_len, m as usize) {
        Ok(b) => b,
        Err(status) => return status,
    };
    let cols = match read_bounds(cols, cols_len, n as usize) {
        Ok(b) => b,
        Err(status) => return status,
    };
    let budget = if budget == 0 {
        oracles::DEFAULT_ENUM_BUDGET
    } else {
        budget
    };
    guarded(|| {
        let query = match CountQuery::new(m, n, q, rows.clone(), cols.clone()) {
            Ok(query) => query,
            Err(err) => return status_of(&err),
        };
        match oracles::brute_count_with_budget(&query, budget) {
            Ok(count) => write_string(out_count, count.to_string()),
            Err(err) => status_of(&err),
        }
    })
}

/// The Hilbert-Kunz polynomial of the m×n case as an opaque handle.
///
/// # Safety
/// `out_poly` must be a valid destination pointer.
#[no_mangle]
pub unsafe extern "C" fn hkdet_hk_polynomial(
    m: u32,
    n: u32,
    out_poly: *mut *mut HkPolynomial,
) -> HkStatus {
    if out_poly.is_null() {
        return HkStatus::NullPointer;
    }
    guarded(|| match fit::hk_polynomial(m, n) {
        Ok(inner) => {
            *out_poly = Box::into_raw(Box::new(HkPolynomial { inner }));
            HkStatus::Ok
        }
        Err(err) => status_of(&err),
    })
}

/// Degree of the polynomial, or -1 for the zero polynomial or a null handle.
///
/// # Safety
/// `poly` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn hkdet_poly_degree(poly: *const HkPolynomial) -> i64 {
    if poly.is_null() {
        return -1;
    }
    (*poly).inner.degree().map_or(-1, |d| d as i64)
}

/// The coefficient of q^power as a numerator/denominator pair of decimal
/// strings (in lowest terms, denominator positive). Powers beyond the degree
/// yield 0/1.
///
/// # Safety
/// `poly` must be a live handle; the out parameters must be valid
/// destination pointers.
#[no_mangle]
pub unsafe extern "C" fn hkdet_poly_coefficient(
    poly: *const HkPolynomial,
    power: usize,
    out_numerator: *mut *mut c_char,
    out_denominator: *mut *mut c_char,
) -> HkStatus {
    if poly.is_null() || out_numerator.is_null() || out_denominator.is_null() {
        return HkStatus::NullPointer;
    }
    guarded(|| {
        let coeff = (*poly).inner.coefficient(power);
        let status = write_string(out_numerator, coeff.numer().to_string());
        if status != HkStatus::Ok {
            return status;
        }
        let status = write_string(out_denominator, coeff.denom().to_string());
        if status != HkStatus::Ok {
            hkdet_string_free(*out_numerator);
        }
        status
    })
}

/// Releases a polynomial handle. Null is ignored.
///
/// # Safety
/// `poly` must have been returned by [`hkdet_hk_polynomial`] and not freed
/// before.
#[no_mangle]
pub unsafe extern "C" fn hkdet_poly_free(poly: *mut HkPolynomial) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// The Hilbert-Kunz multiplicity of the m×n case as a numerator/denominator
/// pair of decimal strings.
///
/// # Safety
/// The out parameters must be valid destination pointers.
#[no_mangle]
pub unsafe extern "C" fn hkdet_multiplicity(
    m: u32,
    n: u32,
    out_numerator: *mut *mut c_char,
    out_denominator: *mut *mut c_char,
) -> HkStatus {
    if out_numerator.is_null() || out_denominator.is_null() {
        return HkStatus::NullPointer;
    }
    guarded(|| match fit::multiplicity(m, n) {
        Ok(value) => {
            let status = write_string(out_numerator, value.numer().to_string());
            if status != HkStatus::Ok {
                return status;
            }
            let status = write_string(out_denominator, value.denom().to_string());
            if status != HkStatus::Ok {
                hkdet_string_free(*out_numerator);
            }
            status
        }
        Err(err) => status_of(&err),
    })
}

/// Verifies the predicted Gröbner basis and compares its standard-monomial
/// count with the recursion. `out_pass` reports the mathematical outcome;
/// `out_standard_count` (optional, may be null) receives the count.
///
/// # Safety
/// `out_pass` must be valid; `out_standard_count` must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn hkdet_gb_verify(
    m: u32,
    n: u32,
    q: u64,
    out_pass: *mut bool,
    out_standard_count: *mut *mut c_char,
) -> HkStatus {
    if out_pass.is_null() {
        return HkStatus::NullPointer;
    }
    if m == 0 || n == 0 || q == 0 {
        return HkStatus::InvalidArgument;
    }
    guarded(|| {
        let report = match groebner::verify_groebner(m, n, q) {
            Ok(report) => report,
            Err(err) => return status_of(&err),
        };
        let standard = match groebner::standard_monomial_count(m, n, q) {
            Ok(count) => count,
            Err(err) => return status_of(&err),
        };
        let matches = standard == counting::hilbert_kunz(m, n, q);
        if !out_standard_count.is_null() {
            let status = write_string(out_standard_count, standard.to_string());
            if status != HkStatus::Ok {
                return status;
            }
        }
        *out_pass = report.pass() && matches;
        HkStatus::Ok
    })
}

/// Runs the brute-force and Segre oracle batteries against the recursion.
///
/// # Safety
/// `out_pass` must be a valid destination pointer.
#[no_mangle]
pub unsafe extern "C" fn hkdet_oracle_check(
    max_mn: u32,
    max_q: u64,
    seed: u64,
    budget: u64,
    out_pass: *mut bool,
) -> HkStatus {
    if out_pass.is_null() {
        return HkStatus::NullPointer;
    }
    let budget = if budget == 0 {
        oracles::DEFAULT_ENUM_BUDGET
    } else {
        budget
    };
    guarded(|| {
        let brute = match oracles::brute_battery(max_mn, max_q, seed, budget) {
            Ok(outcome) => outcome,
            Err(err) => return status_of(&err),
        };
        let segre = oracles::segre_battery(max_mn, max_q);
        *out_pass = brute.pass() && segre.pass();
        HkStatus::Ok
    })
}

/// Checks the binomial summation identity grids (q <= max_q, n <= max_n).
///
/// # Safety
/// `out_pass` must be a valid destination pointer.
#[no_mangle]
pub unsafe extern "C" fn hkdet_lemma_grid(max_q: u64, max_n: u64, out_pass: *mut bool) -> HkStatus {
    if out_pass.is_null() {
        return HkStatus::NullPointer;
    }
    guarded(|| {
        *out_pass = hkdet::binomial::identity_grid(max_q, max_n)
            .iter()
            .all(|(_, outcome)| outcome.pass());
        HkStatus::Ok
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CStr;
    use std::ptr;

    unsafe fn take_string(raw: *mut c_char) -> String {
        let text = CStr::from_ptr(raw).to_str().unwrap().to_string();
        hkdet_string_free(raw);
        text
    }

    #[test]
    fn count_round_trip() {
        unsafe {
            let mut raw: *mut c_char = ptr::null_mut();
            let status = hkdet_count(2, 2, 2, ptr::null(), 0, ptr::null(), 0, &mut raw);
            assert_eq!(status, HkStatus::Ok);
            assert_eq!(take_string(raw), "10");

            let rows = [HKDET_BOUND_INFINITE, 1];
            let cols = [1i64, 1];
            let status = hkdet_count(2, 2, 2, rows.as_ptr(), 2, cols.as_ptr(), 2, &mut raw);
            assert_eq!(status, HkStatus::Ok);
            assert_eq!(take_string(raw), "7");
        }
    }

    #[test]
    fn invalid_inputs_are_reported() {
        unsafe {
            let mut raw: *mut c_char = ptr::null_mut();
            assert_eq!(
                hkdet_count(2, 2, 0, ptr::null(), 0, ptr::null(), 0, &mut raw),
                HkStatus::InvalidArgument
            );
            let rows = [1i64];
            assert_eq!(
                hkdet_count(2, 2, 2, rows.as_ptr(), 1, ptr::null(), 0, &mut raw),
                HkStatus::InvalidArgument
            );
            assert_eq!(
                hkdet_count(2, 2, 2, ptr::null(), 0, ptr::null(), 0, ptr::null_mut()),
                HkStatus::NullPointer
            );
            assert_eq!(
                hkdet_hilbert_kunz(0, 2, 2, &mut raw),
                HkStatus::InvalidArgument
            );
        }
    }

    #[test]
    fn oracle_routes_agree() {
        unsafe {
            let mut direct: *mut c_char = ptr::null_mut();
            let mut segre: *mut c_char = ptr::null_mut();
            let mut brute: *mut c_char = ptr::null_mut();
            assert_eq!(hkdet_hilbert_kunz(2, 3, 3, &mut direct), HkStatus::Ok);
            assert_eq!(hkdet_segre_length(2, 3, 3, &mut segre), HkStatus::Ok);
            assert_eq!(
                hkdet_brute_count(2, 3, 3, ptr::null(), 0, ptr::null(), 0, 0, &mut brute),
                HkStatus::Ok
            );
            let direct = take_string(direct);
            assert_eq!(direct, take_string(segre));
            assert_eq!(direct, take_string(brute));
        }
    }

    #[test]
    fn brute_budget_is_enforced() {
        unsafe {
            let mut raw: *mut c_char = ptr::null_mut();
            assert_eq!(
                hkdet_brute_count(2, 2, 2, ptr::null(), 0, ptr::null(), 0, 3, &mut raw),
                HkStatus::BudgetExceeded
            );
        }
    }

    #[test]
    fn polynomial_handle_lifecycle() {
        unsafe {
            let mut poly: *mut HkPolynomial = ptr::null_mut();
            assert_eq!(hkdet_hk_polynomial(2, 2, &mut poly), HkStatus::Ok);
            assert_eq!(hkdet_poly_degree(poly), 3);

            let mut numer: *mut c_char = ptr::null_mut();
            let mut denom: *mut c_char = ptr::null_mut();
            assert_eq!(
                hkdet_poly_coefficient(poly, 3, &mut numer, &mut denom),
                HkStatus::Ok
            );
            assert_eq!(take_string(numer), "4");
            assert_eq!(take_string(denom), "3");

            assert_eq!(
                hkdet_poly_coefficient(poly, 1, &mut numer, &mut denom),
                HkStatus::Ok
            );
            assert_eq!(take_string(numer), "-1");
            assert_eq!(take_string(denom), "3");

            // Beyond the degree: 0/1.
            assert_eq!(
                hkdet_poly_coefficient(poly, 9, &mut numer, &mut denom),
                HkStatus::Ok
            );
            assert_eq!(take_string(numer), "0");
            assert_eq!(take_string(denom), "1");

            hkdet_poly_free(poly);
            assert_eq!(hkdet_poly_degree(ptr::null()), -1);
            hkdet_poly_free(ptr::null_mut());
        }
    }

    #[test]
    fn multiplicity_fraction() {
        unsafe {
            let mut numer: *mut c_char = ptr::null_mut();
            let mut denom: *mut c_char = ptr::null_mut();
            assert_eq!(
                hkdet_multiplicity(2, 3, &mut numer, &mut denom),
                HkStatus::Ok
            );
            assert_eq!(take_string(numer), "13");
            assert_eq!(take_string(denom), "8");
        }
    }

    #[test]
    fn verification_entry_points() {
        unsafe {
            let mut pass = false;
            let mut standard: *mut c_char = ptr::null_mut();
            assert_eq!(
                hkdet_gb_verify(2, 2, 2, &mut pass, &mut standard),
                HkStatus::Ok
            );
            assert!(pass);
            assert_eq!(take_string(standard), "10");

            let mut pass = false;
            assert_eq!(hkdet_oracle_check(2, 2, 7, 0, &mut pass), HkStatus::Ok);
            assert!(pass);

            let mut pass = false;
            assert_eq!(hkdet_lemma_grid(10, 3, &mut pass), HkStatus::Ok);
            assert!(pass);

            assert_eq!(
                hkdet_gb_verify(5, 5, 5, &mut pass, ptr::null_mut()),
                HkStatus::BudgetExceeded
            );
        }
    }

    #[test]
    fn header_is_generated() {
        let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("include/hkdet.h");
        let text = std::fs::read_to_string(header).expect("header exists");
        assert!(text.contains("hkdet_count"));
        assert!(text.contains("HkStatus"));
        assert!(text.contains("HkPolynomial"));
    }
}
