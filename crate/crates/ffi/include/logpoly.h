#ifndef LOGPOLY_H
#define LOGPOLY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LpIndicator {
  LP_INDICATOR_STARLIKE = 0,
  LP_INDICATOR_CONVEX = 1,
} LpIndicator;

typedef enum LpStatus {
  LP_STATUS_OK = 0,
  LP_STATUS_NULL_POINTER = 1,
  LP_STATUS_INVALID_UTF8 = 2,
  LP_STATUS_SCHEMA = 3,
  LP_STATUS_DOMAIN = 4,
  LP_STATUS_SINGULAR = 5,
  LP_STATUS_INVALID_ARGUMENT = 6,
  LP_STATUS_DEGENERATE = 7,
  LP_STATUS_PRECONDITION = 8,
  LP_STATUS_DEGREE_OVERFLOW = 9,
  LP_STATUS_PANIC = 10,
  LP_STATUS_INTERNAL = 11,
} LpStatus;

/**
 * Which series an indicator or scan is applied to.
 */
typedef enum LpTarget {
  /**
   * `log F` (the assembled map for `parts` documents).
   */
  LP_TARGET_LOG_F = 0,
  LP_TARGET_LOG_G = 1,
} LpTarget;

/**
 * Opaque mapping handle.
 */
typedef struct LpMapping LpMapping;

typedef struct LpComplex {
  double re;
  double im;
} LpComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a JSON mapping spec and stores a new handle in `*out`.
 * Release it with `lp_mapping_free`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LpStatus lp_mapping_from_json(const char *json, struct LpMapping **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `mapping` must come from `lp_mapping_from_json` and not be used afterwards.
 */
void lp_mapping_free(struct LpMapping *mapping);

/**
 * # Safety
 * Pointers must be valid.
 */
enum LpStatus lp_mapping_degree_cap(const struct LpMapping *mapping, size_t *out);

/**
 * Polyharmonic order `p`: the number of weights or harmonic parts.
 *
 * # Safety
 * Pointers must be valid.
 */
enum LpStatus lp_mapping_order(const struct LpMapping *mapping, size_t *out);

/**
 * Evaluates the target series at `re + i·im`, `|z| < 1`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum LpStatus lp_eval(const struct LpMapping *mapping,
                      enum LpTarget target,
                      double re,
                      double im,
                      struct LpComplex *out);

/**
 * `F(z) = exp(log F(z))`; needs a class spec.
 *
 * # Safety
 * Pointers must be valid.
 */
enum LpStatus lp_eval_f(const struct LpMapping *mapping,
                        double re,
                        double im,
                        struct LpComplex *out);

/**
 * `J_{log F} = |u_z|² − |u_z̄|²` from the symbolic derivatives, `0 < |z| < 1`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum LpStatus lp_jacobian_direct(const struct LpMapping *mapping,
                                 double re,
                                 double im,
                                 double *out);

/**
 * `J_{log F}` from the closed form in `f`, `h`, `log G` and the weights.
 *
 * # Safety
 * Pointers must be valid.
 */
enum LpStatus lp_jacobian_closed(const struct LpMapping *mapping,
                                 double re,
                                 double im,
                                 double *out);

/**
 * Starlike `Re(𝓛u/u)` or convex `Re(−∂²_t u / 𝓛u)` indicator at `z`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum LpStatus lp_indicator(const struct LpMapping *mapping,
                           enum LpTarget target,
                           enum LpIndicator kind,
                           double re,
                           double im,
                           double *out);

/**
 * Largest radius of the grid `r_min + k·r_step ≤ r_max` (with `angles`
 * samples per circle) up to which every circle has convex indicator `≥ −tol`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum LpStatus lp_convexity_radius(const struct LpMapping *mapping,
                                  enum LpTarget target,
                                  double r_min,
                                  double r_max,
                                  double r_step,
                                  size_t angles,
                                  double tol,
                                  double *out);

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next `lp_*` call on the same thread.
 */
const char *lp_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *lp_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LOGPOLY_H */
