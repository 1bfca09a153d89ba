#ifndef STURMIAN_LAB_H
#define STURMIAN_LAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SlStatus {
  SL_STATUS_OK = 0,
  SL_STATUS_NULL_POINTER = 1,
  SL_STATUS_INVALID_UTF8 = 2,
  SL_STATUS_PARSE = 3,
  SL_STATUS_DOMAIN = 4,
  SL_STATUS_INSUFFICIENT_PREFIX = 5,
  SL_STATUS_BUFFER_TOO_SMALL = 6,
  SL_STATUS_INTERNAL = 7,
  SL_STATUS_PANIC = 8,
} SlStatus;

/**
 * Opaque infinite word.
 */
typedef struct SlWord SlWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Owned by the
 * library and valid until the next call on this thread.
 */
const char *sl_last_error(void);

/**
 * Library version; static storage.
 */
const char *sl_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void sl_string_free(char *s);

/**
 * Characteristic word of `slope` (CF literal or `quad:(a,b,c,D)`).
 *
 * # Safety
 * `slope` must be a valid C string, `out` a valid pointer.
 */
enum SlStatus sl_word_new_characteristic(const char *slope, struct SlWord **out);

/**
 * Mechanical word s_{slope,rho}; `ceil` selects the upper rounding.
 *
 * # Safety
 * `slope` and `rho` must be valid C strings, `out` a valid pointer.
 */
enum SlStatus sl_word_new_mechanical(const char *slope,
                                     const char *rho,
                                     bool ceil,
                                     struct SlWord **out);

/**
 * Word with a given locating chain (letter literal for slope φ, or JSON).
 * `levels` levels are used; periodic letter chains can be unrolled to any depth.
 *
 * # Safety
 * `slope` may be null (slope φ); `chain` must be a valid C string, `out` a valid pointer.
 */
enum SlStatus sl_word_new_chain(const char *slope,
                                const char *chain,
                                size_t levels,
                                struct SlWord **out);

/**
 * # Safety
 * `w` must be null or a word from this library, freed once.
 */
void sl_word_free(struct SlWord *w);

/**
 * Copy the first `len` letters (bytes 0/1) into `buf` of capacity `cap`.
 *
 * # Safety
 * `w` must be a live word; `buf` must hold `cap` bytes.
 */
enum SlStatus sl_word_prefix(struct SlWord *w, size_t len, uint8_t *buf, size_t cap);

/**
 * r(1..=n_max) into `r` (capacity `cap` ≥ n_max); `r[i]` holds r(i+1).
 *
 * # Safety
 * `w` must be a live word; `r` must hold `cap` values.
 */
enum SlStatus sl_word_r_profile(struct SlWord *w, size_t n_max, uint64_t *r, size_t cap);

/**
 * Estimate rep from r(n) for n ≤ `n_max`, discarding the first `tail`
 * fraction of Λ ratios (a negative `tail` selects the default 0.75).
 *
 * # Safety
 * `w` must be a live word; `value` valid; `error_bar` may be null.
 */
enum SlStatus sl_word_rep_estimate(struct SlWord *w,
                                   size_t n_max,
                                   double tail,
                                   double *value,
                                   double *error_bar);

/**
 * Locating chain of the word over `levels` levels, as JSON.
 *
 * # Safety
 * `w` must be a live word; `out` valid. Free the result with [`sl_string_free`].
 */
enum SlStatus sl_word_chain_json(struct SlWord *w, size_t levels, char **out);

/**
 * Exact rep of an eventually periodic slope-φ letter chain such as `(b2a2)`.
 * `quad` receives `quad:(a,b,c,D)` and may be null.
 *
 * # Safety
 * `chain` must be a valid C string; `value` valid; `quad` null or valid.
 */
enum SlStatus sl_rep_exact(const char *chain, double *value, char **quad);

/**
 * The table of distinguished spectrum values as JSON.
 *
 * # Safety
 * `out` must be valid. Free the result with [`sl_string_free`].
 */
enum SlStatus sl_mu_table_json(char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* STURMIAN_LAB_H */
