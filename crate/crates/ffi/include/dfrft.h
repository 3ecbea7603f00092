#ifndef DFRFT_H
#define DFRFT_H

/* Generated with cbindgen:0.27.0 */

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DfrftMethod {
  DFRFT_METHOD_PROJECTOR = 0,
  DFRFT_METHOD_VANDERMONDE = 1,
} DfrftMethod;

/*
 Result code of every fallible call.
 */
typedef enum DfrftStatus {
  DFRFT_STATUS_OK = 0,
  DFRFT_STATUS_NULL_POINTER = 1,
  DFRFT_STATUS_INVALID_SIZE = 2,
  DFRFT_STATUS_INVALID_ORDER = 3,
  DFRFT_STATUS_LENGTH_MISMATCH = 4,
  DFRFT_STATUS_SINGULAR = 5,
  DFRFT_STATUS_INVALID_ARGUMENT = 6,
  DFRFT_STATUS_PANIC = 7,
} DfrftStatus;

/*
 Opaque transform matrix.
 */
typedef struct DfrftMatrix DfrftMatrix;

typedef struct DfrftComplex {
  double re;
  double im;
} DfrftComplex;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Static, NUL-terminated description of a status code. Never free it.
 */
const char *dfrft_status_message(enum DfrftStatus status);

/*
 Builds `F_order` of size `n`.

 # Safety
 `out` must be a valid pointer to writable storage for one handle.
 */
enum DfrftStatus dfrft_matrix_new(double order,
                                  size_t n,
                                  enum DfrftMethod method,
                                  struct DfrftMatrix **out);

/*
 Builds `F_{p/q}` keeping the exact rational order.

 # Safety
 `out` must be a valid pointer to writable storage for one handle.
 */
enum DfrftStatus dfrft_matrix_new_rational(int64_t numerator,
                                           int64_t denominator,
                                           size_t n,
                                           enum DfrftMethod method,
                                           struct DfrftMatrix **out);

/*
 Builds `(F_order)^s` by per-eigenvalue branch composition.

 # Safety
 `out` must be a valid pointer to writable storage for one handle.
 */
enum DfrftStatus dfrft_real_power(double order, double s, size_t n, struct DfrftMatrix **out);

/*
 Releases a handle. Null is ignored.

 # Safety
 `m` must be null or a handle returned by this library that has not been freed.
 */
void dfrft_matrix_free(struct DfrftMatrix *m);

/*
 Transform size, or 0 for a null handle.

 # Safety
 `m` must be null or a live handle.
 */
size_t dfrft_matrix_size(const struct DfrftMatrix *m);

/*
 Order value of the handle, NaN for a null handle.

 # Safety
 `m` must be null or a live handle.
 */
double dfrft_matrix_order(const struct DfrftMatrix *m);

/*
 Vandermonde solve residual (`0` for the projector method).

 # Safety
 `m` must be null or a live handle.
 */
double dfrft_matrix_residual(const struct DfrftMatrix *m);

/*
 Copies the `n*n` row-major entries into `out`; `len` must equal `n*n`.

 # Safety
 `m` must be a live handle and `out` must point to `len` writable elements.
 */
enum DfrftStatus dfrft_matrix_entries(const struct DfrftMatrix *m,
                                      struct DfrftComplex *out,
                                      size_t len);

/*
 `y = F·x` with a materialized matrix; `len` must equal the transform size.

 # Safety
 `m` must be a live handle; `x` and `y` must each point to `len` elements and may not overlap.
 */
enum DfrftStatus dfrft_matrix_apply(const struct DfrftMatrix *m,
                                    const struct DfrftComplex *x,
                                    struct DfrftComplex *y,
                                    size_t len);

/*
 `y = F_order·x` without forming the matrix (at most three DFT matvecs).

 # Safety
 `x` and `y` must each point to `len` elements; they may alias.
 */
enum DfrftStatus dfrft_apply_fast(double order,
                                  const struct DfrftComplex *x,
                                  struct DfrftComplex *y,
                                  size_t len);

/*
 Polynomial coefficients `c` with `F = Σ c[k] U^k`, plus the solve residual.

 # Safety
 `out` must point to `n` writable elements; `residual` may be null.
 */
enum DfrftStatus dfrft_coefficients(double order,
                                    size_t n,
                                    struct DfrftComplex *out,
                                    double *residual);

/*
 Eigenvalue multiplicities of the size-`n` DFT in the order `+1, -1, -i, +i`.

 # Safety
 `out` must point to 4 writable elements.
 */
enum DfrftStatus dfrft_multiplicities(size_t n, size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DFRFT_H */
