#ifndef GRAPHCURV_H
#define GRAPHCURV_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. Values 0 to 4 match the `graphcurv` CLI exit codes.
 */
typedef enum {
  GC_STATUS_OK = 0,
  GC_STATUS_CHECK_FAILED = 1,
  GC_STATUS_HYPOTHESIS_UNSATISFIED = 2,
  GC_STATUS_INVALID_INPUT = 3,
  GC_STATUS_NUMERICAL = 4,
  GC_STATUS_NULL_POINTER = 5,
  GC_STATUS_PANIC = 6,
} GcStatus;

typedef enum {
  GC_KATO_VARIANT_A = 0,
  GC_KATO_VARIANT_B = 1,
} GcKatoVariant;

/**
 * Opaque graph handle.
 */
typedef struct GcGraph GcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a graph document. `json` must be a nul-terminated UTF-8 string.
 *
 * # Safety
 * `json` must be a valid C string and `out` a valid pointer.
 */
GcStatus gc_graph_from_json(const char *json, GcGraph **out);

/**
 * Three-vertex example graph with parameter `eps > 0`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
GcStatus gc_graph_paper_example(double eps, GcGraph **out);

/**
 * Releases a graph. Null is ignored.
 *
 * # Safety
 * `g` must be null or a handle not yet freed.
 */
void gc_graph_free(GcGraph *g);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
GcStatus gc_graph_vertex_count(const GcGraph *g, size_t *out);

/**
 * Serializes the graph. Release the string with [`gc_string_free`].
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
GcStatus gc_graph_to_json(const GcGraph *g, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void gc_string_free(char *s);

/**
 * Curvature at every vertex for dimension `n` (`INFINITY` allowed), written
 * to `out_rho` in vertex order.
 *
 * # Safety
 * `g` must be a live handle; `out_rho` must hold `len` doubles.
 */
GcStatus gc_curvature(const GcGraph *g, double n, double tol, double *out_rho, size_t len);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
GcStatus gc_lambda1(const GcGraph *g, double *out);

/**
 * Lowest eigenvalue of `L/2 + rho` and, if `out_phi` is non-null, its
 * positive eigenfunction.
 *
 * # Safety
 * `rho` and `out_phi` (if non-null) must hold `len` doubles.
 */
GcStatus gc_ground_state(const GcGraph *g,
                         const double *rho,
                         size_t len,
                         double *out_e,
                         double *out_phi);

/**
 * Exact Cheeger constant (at most 24 vertices).
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
GcStatus gc_cheeger(const GcGraph *g, double *out);

/**
 * Kato constant of the non-negative potential `w` on `[0, horizon]`.
 *
 * # Safety
 * `w` must hold `len` doubles and `out` must be valid.
 */
GcStatus gc_kato_constant(const GcGraph *g,
                          const double *w,
                          size_t len,
                          double horizon,
                          double *out);

/**
 * Kato condition for `(rho - k)_-`. Writes the Kato constant and whether
 * it is below the chosen threshold.
 *
 * # Safety
 * `rho` must hold `len` doubles; `out_admissible` and `out_value` must be valid.
 */
GcStatus gc_kato_check(const GcGraph *g,
                       const double *rho,
                       size_t len,
                       double k,
                       double t,
                       GcKatoVariant variant,
                       bool strict,
                       bool *out_admissible,
                       double *out_value);

/**
 * Runs a verification suite (`"all"` or a single check name) and writes
 * one JSON report per line to `out_json`. A null `rho` means the curvature
 * profile for dimension `n`. Returns `CheckFailed` or
 * `HypothesisUnsatisfied` with the reports still written.
 *
 * # Safety
 * `suite` must be a valid C string; `rho` is null or holds `len` doubles;
 * `out_json` must be valid.
 */
GcStatus gc_verify(const GcGraph *g,
                   const char *suite,
                   const double *rho,
                   size_t len,
                   double k,
                   double t,
                   double n,
                   size_t samples,
                   uint64_t seed,
                   char **out_json);

/**
 * Message for the most recent failure on this thread, or null. The pointer
 * stays valid until the next library call on the same thread.
 */
const char *gc_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRAPHCURV_H */
