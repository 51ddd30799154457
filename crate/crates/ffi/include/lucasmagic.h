#ifndef LUCASMAGIC_H
#define LUCASMAGIC_H

/* Generated by cbindgen from the lucas-magic-ffi sources. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LmStatus {
  LM_STATUS_OK = 0,
  LM_STATUS_NULL_POINTER = 1,
  LM_STATUS_INVALID_ARGUMENT = 2,
  LM_STATUS_PARSE = 3,
  LM_STATUS_OUT_OF_RANGE = 4,
  /**
   * The value does not fit the C integer type requested.
   */
  LM_STATUS_OVERFLOW = 5,
  LM_STATUS_ORDER_MISMATCH = 6,
  LM_STATUS_DEGENERATE = 7,
  LM_STATUS_INTERNAL = 8,
} LmStatus;

/**
 * Opaque square matrix with arbitrary-precision entries.
 */
typedef struct LmMatrix LmMatrix;

typedef struct LmVerification {
  size_t order;
  bool is_magic;
  bool is_regular;
  bool is_natural;
  bool fnc_pass;
  size_t exact_rank;
  /**
   * Parameters of a compound Lucas square reproduce the matrix.
   */
  bool is_family;
} LmVerification;

typedef struct LmCensus {
  size_t level;
  size_t order;
  uint64_t mu;
  uint64_t lucas_fundamentals;
  uint64_t frierson_fundamentals;
  size_t rank;
  uint64_t sv_classes;
} LmCensus;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a compound Lucas square from `"c,v,y;c,v,y;..."`, innermost level first.
 *
 * # Safety
 * `params` must be a nul-terminated string and `out` a valid pointer.
 */
enum LmStatus lm_lucas_new(const char *params, struct LmMatrix **out);

/**
 * Builds a compound Frierson square from `"v,y;v,y;..."`.
 *
 * # Safety
 * `params` must be a nul-terminated string and `out` a valid pointer.
 */
enum LmStatus lm_frierson_new(const char *params, struct LmMatrix **out);

/**
 * Parses a whitespace grid or the JSON matrix format.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum LmStatus lm_matrix_parse(const char *text, struct LmMatrix **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `m` must be null or a handle from this library not already freed.
 */
void lm_matrix_free(struct LmMatrix *m);

/**
 * Order of the matrix, 0 for null.
 *
 * # Safety
 * `m` must be null or a live handle.
 */
size_t lm_matrix_order(const struct LmMatrix *m);

/**
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum LmStatus lm_matrix_get(const struct LmMatrix *m, size_t row, size_t col, int64_t *out);

/**
 * Grid text, one row per line. Free with [`lm_string_free`].
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum LmStatus lm_matrix_to_grid(const struct LmMatrix *m, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library not already freed.
 */
void lm_string_free(char *s);

/**
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum LmStatus lm_verify(const struct LmMatrix *m, struct LmVerification *out);

/**
 * The full verification report as JSON. Free with [`lm_string_free`].
 *
 * # Safety
 * `m` must be a live handle and `out` a valid pointer.
 */
enum LmStatus lm_verify_json(const struct LmMatrix *m, char **out);

/**
 * Spectrum report of the square with Lucas parameters `params`, as JSON.
 *
 * # Safety
 * `params` must be a nul-terminated string and `out` a valid pointer.
 */
enum LmStatus lm_spectrum_json(const char *params, char **out);

/**
 * Whether `a·b = b·a` exactly.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` a valid pointer.
 */
enum LmStatus lm_commutes(const struct LmMatrix *a, const struct LmMatrix *b, bool *out);

/**
 * Per-level constants. Levels whose counts exceed 64 bits give `Overflow`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum LmStatus lm_census(size_t level, struct LmCensus *out);

/**
 * Message for the last failed call on this thread; empty after a success.
 * Valid until the next call into the library on the same thread.
 */
const char *lm_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LUCASMAGIC_H */
