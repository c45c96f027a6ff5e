#ifndef K3PAIRS_H
#define K3PAIRS_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum K3pStatus {
  K3pStatus_Ok = 0,
  /**
   * Bad argument or configuration.
   */
  K3pStatus_InvalidArgument = 1,
  /**
   * A required pointer was null.
   */
  K3pStatus_NullPointer = 2,
  /**
   * An identity failed to hold; see the error message for its location.
   */
  K3pStatus_IdentityFailure = 3,
  /**
   * Outside what the library models (for instance r > n).
   */
  K3pStatus_Unsupported = 4,
  /**
   * Internal error; the library caught a panic.
   */
  K3pStatus_Internal = 5,
} K3pStatus;

/**
 * Rank data and truncation orders shared by the calls that take a handle.
 */
typedef struct K3pSession K3pSession;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last non-OK status on this thread; never null.
 */
const char *k3p_last_error(void);

/**
 * Creates a handle for rank `n`, `r` sections, q-order and y-window.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum K3pStatus k3p_session_new(int64_t n,
                               int64_t r,
                               int64_t qorder,
                               int64_t ywin,
                               struct K3pSession **out);

/**
 * # Safety
 * `s` must come from [`k3p_session_new`] and not be used afterwards; null is ignored.
 */
void k3p_session_free(struct K3pSession *s);

/**
 * # Safety
 * `s` must come from this library (or be null).
 */
void k3p_string_free(char *s);

/**
 * `e(Syst^n(r, D_g, k + r))` as a decimal string, or its Hodge polynomial
 * in `t`, `tb` when `hodge` is nonzero.
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
enum K3pStatus k3p_syst(const struct K3pSession *s,
                        int64_t g,
                        int64_t k,
                        int32_t hodge,
                        char **out);

/**
 * Coefficients of `G^r_n` (or of `g^r_n = G^r_n|_{u=1}` when `euler` is
 * nonzero) as a JSON array of `{"q", "y", "value"}` objects.
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
enum K3pStatus k3p_series_json(const struct K3pSession *s, int32_t euler, char **out);

/**
 * Fits the `v^s` coefficient of `v^2 g^r_n(q, e^{iv})` and returns the fit
 * report as JSON.
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
enum K3pStatus k3p_fit_json(const struct K3pSession *s,
                            int64_t vpow,
                            int64_t weight_ceiling,
                            int64_t fit_qorder,
                            int64_t test_qorder,
                            char **out);

/**
 * Runs a named suite (`ucomb`, `theta`, `routes`, `duality`, `modularity`,
 * `all`) up to rank `n`. Returns `IdentityFailure` with the first failing
 * identity in the error message.
 *
 * # Safety
 * `suite` must be a nul-terminated string.
 */
enum K3pStatus k3p_verify(const char *suite,
                          int64_t n,
                          int64_t cutoff,
                          int64_t qorder,
                          int64_t ywin,
                          int64_t vorder);

/**
 * Library version, static string.
 */
const char *k3p_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* K3PAIRS_H */
