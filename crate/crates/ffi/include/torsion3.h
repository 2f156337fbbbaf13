#ifndef TORSION3_H
#define TORSION3_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum T3Status {
  T3_STATUS_OK = 0,
  /**
   * Invalid input or failed precondition.
   */
  T3_STATUS_INVALID = 1,
  T3_STATUS_BUDGET_EXCEEDED = 2,
  T3_STATUS_OBSTRUCTED = 3,
  T3_STATUS_UNSUPPORTED = 4,
  T3_STATUS_NULL_POINTER = 5,
  T3_STATUS_INTERNAL = 6,
} T3Status;

typedef enum T3Verdict {
  T3_VERDICT_TRIVIAL = 0,
  T3_VERDICT_PLUS = 1,
  T3_VERDICT_MINUS = -1,
  T3_VERDICT_UNSUPPORTED = 2,
} T3Verdict;

/**
 * A validated and classified quartic.
 */
typedef struct T3Quartic T3Quartic;

/**
 * Records produced by `t3_solve`.
 */
typedef struct T3Solutions T3Solutions;

typedef struct T3Budgets {
  uint64_t factor;
  uint64_t height;
  uint32_t retry;
} T3Budgets;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread. The pointer stays valid
 * until the next call into the library from the same thread.
 */
const char *t3_last_error(void);

struct T3Budgets t3_budgets_default(void);

/**
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void t3_string_free(char *s);

/**
 * Parses, validates and classifies a quartic such as "x^4+2*x^2-12".
 * `budgets` may be NULL for the defaults.
 *
 * # Safety
 * `expr` must be a NUL-terminated string and `out` a valid pointer.
 */
enum T3Status t3_quartic_new(const char *expr,
                             const struct T3Budgets *budgets,
                             struct T3Quartic **out);

/**
 * # Safety
 * `q` must come from `t3_quartic_new` and not have been freed.
 */
void t3_quartic_free(struct T3Quartic *q);

/**
 * The Galois case with its normal form and the validation data, as JSON.
 *
 * # Safety
 * `q` must be a live handle and `out` a valid pointer.
 */
enum T3Status t3_quartic_case_json(const struct T3Quartic *q, char **out);

/**
 * The obstruction verdict; `json_out` may be NULL, otherwise it receives the
 * full report.
 *
 * # Safety
 * `q` must be a live handle, `verdict` a valid pointer.
 */
enum T3Status t3_quartic_obstruction(const struct T3Quartic *q,
                                     enum T3Verdict *verdict,
                                     char **json_out);

/**
 * Up to `count` verified non-CM curves with distinct j.
 *
 * # Safety
 * `q` must be a live handle and `out` a valid pointer.
 */
enum T3Status t3_solve(const struct T3Quartic *q, uintptr_t count, struct T3Solutions **out);

/**
 * # Safety
 * `s` must come from `t3_solve` and not have been freed.
 */
void t3_solutions_free(struct T3Solutions *s);

/**
 * # Safety
 * `s` must be a live handle.
 */
uintptr_t t3_solutions_len(const struct T3Solutions *s);

/**
 * Record `index` as JSON: curve, t, j and the certificate chain.
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
enum T3Status t3_solutions_record_json(const struct T3Solutions *s, uintptr_t index, char **out);

/**
 * Re-runs the certificate of record `index` against the quartic.
 *
 * # Safety
 * `q` and `s` must be live handles, `ok` a valid pointer.
 */
enum T3Status t3_solutions_verify(const struct T3Quartic *q,
                                  const struct T3Solutions *s,
                                  uintptr_t index,
                                  bool *ok);

/**
 * Whether t^3 = j holds for the first `terms` coefficients.
 *
 * # Safety
 * `ok` must be a valid pointer.
 */
enum T3Status t3_qexp_check(uintptr_t terms, bool *ok);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TORSION3_H */
