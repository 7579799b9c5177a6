/* C interface to hkdet: exact Hilbert-Kunz functions of 2x2 determinantal rings.
 * Generated by cbindgen; do not edit by hand. */

#ifndef HKDET_H
#define HKDET_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Bound value meaning "no cap" (INT64_MAX).
 */
#define HKDET_BOUND_INFINITE INT64_MAX

/**
 * Result of an FFI call. `Ok` means the out parameters were written; any
 * other value leaves them untouched.
 */
typedef enum HkStatus {
  HkStatus_Ok = 0,
  HkStatus_NullPointer = 1,
  HkStatus_InvalidArgument = 2,
  HkStatus_BudgetExceeded = 3,
  /**
   * An exactness check failed; this indicates a defect, not bad input.
   */
  HkStatus_VerificationFailed = 4,
  HkStatus_Internal = 5,
} HkStatus;

/**
 * Opaque handle to a polynomial in q with exact rational coefficients.
 */
typedef struct HkPolynomial HkPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Frees a string allocated by this library. Null is ignored.
 *
 * # Safety
 * `s` must have been returned by an hkdet function and not freed before.
 */
void hkdet_string_free(char *s);

/**
 * The bounded staircase-monomial count N_q(m, n; rows; cols) as a decimal
 * string.
 *
 * # Safety
 * `rows`/`cols` must be null or point to `rows_len`/`cols_len` readable
 * values; `out_count` must be a valid destination pointer.
 */
enum HkStatus hkdet_count(uint32_t m,
                          uint32_t n,
                          uint64_t q,
                          const int64_t *rows,
                          uintptr_t rows_len,
                          const int64_t *cols,
                          uintptr_t cols_len,
                          char **out_count);

/**
 * The Hilbert-Kunz function value at q (all bounds infinite) as a decimal
 * string.
 *
 * # Safety
 * `out_count` must be a valid destination pointer.
 */
enum HkStatus hkdet_hilbert_kunz(uint32_t m, uint32_t n, uint64_t q, char **out_count);

/**
 * The same value computed over the Segre factors, as a decimal string.
 *
 * # Safety
 * `out_count` must be a valid destination pointer.
 */
enum HkStatus hkdet_segre_length(uint32_t m, uint32_t n, uint64_t q, char **out_count);

/**
 * The same count by exhaustive enumeration (the brute oracle).
 *
 * # Safety
 * Pointer arguments as in [`hkdet_count`].
 */
enum HkStatus hkdet_brute_count(uint32_t m,
                                uint32_t n,
                                uint64_t q,
                                const int64_t *rows,
                                uintptr_t rows_len,
                                const int64_t *cols,
                                uintptr_t cols_len,
                                uint64_t budget,
                                char **out_count);

/**
 * The Hilbert-Kunz polynomial of the m×n case as an opaque handle.
 *
 * # Safety
 * `out_poly` must be a valid destination pointer.
 */
enum HkStatus hkdet_hk_polynomial(uint32_t m, uint32_t n, struct HkPolynomial **out_poly);

/**
 * Degree of the polynomial, or -1 for the zero polynomial or a null handle.
 *
 * # Safety
 * `poly` must be null or a live handle from this library.
 */
int64_t hkdet_poly_degree(const struct HkPolynomial *poly);

/**
 * The coefficient of q^power as a numerator/denominator pair of decimal
 * strings (in lowest terms, denominator positive). Powers beyond the degree
 * yield 0/1.
 *
 * # Safety
 * `poly` must be a live handle; the out parameters must be valid
 * destination pointers.
 */
enum HkStatus hkdet_poly_coefficient(const struct HkPolynomial *poly,
                                     uintptr_t power,
                                     char **out_numerator,
                                     char **out_denominator);

/**
 * Releases a polynomial handle. Null is ignored.
 *
 * # Safety
 * `poly` must have been returned by [`hkdet_hk_polynomial`] and not freed
 * before.
 */
void hkdet_poly_free(struct HkPolynomial *poly);

/**
 * The Hilbert-Kunz multiplicity of the m×n case as a numerator/denominator
 * pair of decimal strings.
 *
 * # Safety
 * The out parameters must be valid destination pointers.
 */
enum HkStatus hkdet_multiplicity(uint32_t m,
                                 uint32_t n,
                                 char **out_numerator,
                                 char **out_denominator);

/**
 * Verifies the predicted Gröbner basis and compares its standard-monomial
 * count with the recursion. `out_pass` reports the mathematical outcome;
 * `out_standard_count` (optional, may be null) receives the count.
 *
 * # Safety
 * `out_pass` must be valid; `out_standard_count` must be null or valid.
 */
enum HkStatus hkdet_gb_verify(uint32_t m,
                              uint32_t n,
                              uint64_t q,
                              bool *out_pass,
                              char **out_standard_count);

/**
 * Runs the brute-force and Segre oracle batteries against the recursion.
 *
 * # Safety
 * `out_pass` must be a valid destination pointer.
 */
enum HkStatus hkdet_oracle_check(uint32_t max_mn,
                                 uint64_t max_q,
                                 uint64_t seed,
                                 uint64_t budget,
                                 bool *out_pass);

/**
 * Checks the binomial summation identity grids (q <= max_q, n <= max_n).
 *
 * # Safety
 * `out_pass` must be a valid destination pointer.
 */
enum HkStatus hkdet_lemma_grid(uint64_t max_q, uint64_t max_n, bool *out_pass);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HKDET_H */
