/* tracecode - trace-defined three-weight linear codes over F_p.
 *
 * C API over the C++ core: opaque handles, integer error codes, caller-owned
 * strings released through tc_string_free. Field elements are addressed by
 * canonical index: the integer 0..q-1 whose base-p digits, little-endian, are
 * the coefficients in the polynomial basis.
 */
#ifndef TRACECODE_H
#define TRACECODE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(TRACECODE_BUILD)
#define TC_API __declspec(dllexport)
#else
#define TC_API __declspec(dllimport)
#endif
#else
#define TC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tc_status {
  TC_OK = 0,
  TC_ERR_NOT_PRIME = 1,
  TC_ERR_NOT_IRREDUCIBLE = 2,
  TC_ERR_OVERFLOW = 3,
  TC_ERR_DIVISION_BY_ZERO = 4,
  TC_ERR_ZERO_ARGUMENT = 5,
  TC_ERR_UNSUPPORTED_M = 6,
  TC_ERR_BUDGET_EXCEEDED = 7,
  TC_ERR_BAD_ARGUMENT = 8,
  TC_ERR_IO = 9,
  TC_ERR_NOMEM = 10,
  TC_ERR_INTERNAL = 11,
} tc_status;

/* Enumeration budget: instances with p^(2m-1) above the budget are refused.
 * Passing 0 anywhere a budget is expected selects this default. */
#define TC_DEFAULT_BUDGET 100000000ull

typedef struct tc_field tc_field;
typedef struct tc_code tc_code;

TC_API const char* tc_status_name(tc_status s);
/* Detail message of the most recent failure on this thread. */
TC_API const char* tc_last_error(void);
TC_API void tc_string_free(char* s);

/* ---- fields ------------------------------------------------------------ */

/* modulus_csv: "c0,c1,...,cm" with cm = 1, or NULL for the canonical modulus
 * (first monic irreducible of degree m in canonical index order). */
TC_API tc_status tc_field_create(int64_t p, int32_t m, const char* modulus_csv, tc_field** out);
TC_API void tc_field_free(tc_field* f);

TC_API int64_t tc_field_p(const tc_field* f);
TC_API int32_t tc_field_m(const tc_field* f);
TC_API uint64_t tc_field_q(const tc_field* f);
TC_API tc_status tc_field_modulus(const tc_field* f, char** out_csv);
/* Coefficients of element x as "c0,c1,...,c_{m-1}". */
TC_API tc_status tc_field_element_csv(const tc_field* f, uint64_t x, char** out_csv);

TC_API tc_status tc_field_trace(const tc_field* f, uint64_t x, int64_t* out);
/* Quadratic character: -1, 0 or 1. */
TC_API tc_status tc_field_eta(const tc_field* f, uint64_t x, int32_t* out);
TC_API tc_status tc_field_generator(const tc_field* f, uint64_t* out);
TC_API tc_status tc_legendre(int64_t p, int64_t y, int32_t* out);

/* ---- character sums ----------------------------------------------------- */

/* Quadratic Gauss sum over F_q: direct summation and the closed form. */
TC_API tc_status tc_gauss_sums(const tc_field* f, double* numeric_re, double* numeric_im,
                               double* closed_re, double* closed_im);
/* Same over the prime field F_p. */
TC_API tc_status tc_gauss_sums_fp(int64_t p, double* numeric_re, double* numeric_im,
                                  double* closed_re, double* closed_im);

/* ---- codes -------------------------------------------------------------- */

/* Builds C_{D_a}: enumerates the exact weight distribution, derives [n, k, d],
 * and compares against the closed-form table. Requires m > 2 and 0 < a < p. */
TC_API tc_status tc_code_build(const tc_field* f, int64_t a, uint64_t budget, tc_code** out);
TC_API void tc_code_free(tc_code* c);

TC_API uint64_t tc_code_length(const tc_code* c);
TC_API int32_t tc_code_dimension(const tc_code* c);
TC_API uint64_t tc_code_min_distance(const tc_code* c);
TC_API int32_t tc_code_matches_theory(const tc_code* c);
TC_API int32_t tc_code_ratio_holds(const tc_code* c);
TC_API size_t tc_code_weight_rows(const tc_code* c);
TC_API tc_status tc_code_weight_row(const tc_code* c, size_t i, uint64_t* weight,
                                    uint64_t* multiplicity);

/* "1 + 6x^5 + 8x^6 + 12x^7" */
TC_API tc_status tc_code_enumerator_text(const tc_code* c, char** out);
/* Deterministic JSON summary (sorted keys, ascending weights). */
TC_API tc_status tc_code_summary_json(const tc_code* c, char** out);
/* Generator matrix, one row per basis codeword, entries 0..p-1. */
TC_API tc_status tc_code_generator_matrix_csv(const tc_code* c, char** out);

/* ---- counts ------------------------------------------------------------- */

/* Brute-force n_(b,a) over the trace fiber (a = 0 allowed, includes x = 0). */
TC_API tc_status tc_count_nba(const tc_field* f, uint64_t b, int64_t a, uint64_t* out);
/* Closed-form n_(b,a) for a != 0. */
TC_API tc_status tc_predicted_nba(const tc_field* f, uint64_t b, int64_t a, uint64_t* out);
/* Closed-form n_(b,0). */
TC_API tc_status tc_predicted_nb0(const tc_field* f, uint64_t b, uint64_t* out);

/* ---- lemma verification -------------------------------------------------- */

typedef enum tc_lemma {
  TC_LEMMA_1 = 1,   /* Gauss sums: numeric vs closed form, |G| = sqrt(q) */
  TC_LEMMA_2 = 2,   /* quadratic sums: direct vs closed form */
  TC_LEMMA_4 = 4,
  TC_LEMMA_5 = 5,
  TC_LEMMA_6 = 6,
  TC_LEMMA_7 = 7,
  TC_LEMMA_8 = 8,
  TC_LEMMA_12 = 12,
  TC_LEMMA_13 = 13,
} tc_lemma;

typedef struct tc_verify_result {
  int32_t pass;
  int32_t exhaustive; /* all b (and a) covered, as opposed to sampled */
  uint64_t cases;
  char witness[160];  /* first failing case, empty string when pass */
} tc_verify_result;

/* TC_ERR_UNSUPPORTED_M when the lemma does not apply at this (p, m). */
TC_API tc_status tc_verify_lemma(const tc_field* f, tc_lemma which, uint64_t seed,
                                 tc_verify_result* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TRACECODE_H */
