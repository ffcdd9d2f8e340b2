#ifndef GRASSCOH_H
#define GRASSCOH_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GcStatus {
  GC_STATUS_OK = 0,
  GC_STATUS_NULL_POINTER = 1,
  GC_STATUS_INVALID_ARGUMENT = 2,
  GC_STATUS_NOT_A_PARTITION = 3,
  /**
   * The closed formula is not asserted at these parameters.
   */
  GC_STATUS_OUTSIDE_VALIDITY = 4,
  GC_STATUS_OUT_OF_RANGE = 5,
  GC_STATUS_BUFFER_TOO_SMALL = 6,
  GC_STATUS_INTERNAL = 99,
} GcStatus;

/**
 * A cohomology table of `Λ^p Ω ⊗ O(l)` on a Grassmannian, flattened to a
 * list of components ordered by `(p, q)`.
 */
typedef struct GcCohomologyTable GcCohomologyTable;

/**
 * A partition.
 */
typedef struct GcPartition GcPartition;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message of this thread into `buf` as a NUL-terminated
 * string, truncating to `cap − 1` bytes. Returns the untruncated length.
 *
 * # Safety
 * `buf` must have room for `cap` bytes, or be null with `cap == 0`.
 */
size_t gc_last_error_message(char *buf, size_t cap);

/**
 * Builds a partition from `len` weakly decreasing parts; trailing zeros are dropped.
 *
 * # Safety
 * `parts` must point to `len` values; `out` must be valid for writes.
 */
enum GcStatus gc_partition_new(const size_t *parts, size_t len, struct GcPartition **out);

/**
 * Parses `"4,2,1"`; `""` and `"0"` give the empty partition.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum GcStatus gc_partition_parse(const char *text, struct GcPartition **out);

/**
 * # Safety
 * `p` must come from this library and not be used afterwards. Null is ignored.
 */
void gc_partition_free(struct GcPartition *p);

/**
 * Number of nonzero parts.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for writes.
 */
enum GcStatus gc_partition_len(const struct GcPartition *p, size_t *out);

/**
 * Copies the parts into `buf`. `*out_len` receives the part count even when
 * the buffer is too small.
 *
 * # Safety
 * `p` must be a live handle; `buf` must have room for `cap` values; `out_len` must be valid.
 */
enum GcStatus gc_partition_parts(const struct GcPartition *p,
                                 size_t *buf,
                                 size_t cap,
                                 size_t *out_len);

/**
 * Hook number of cell `(i, j)`, zero-based.
 *
 * # Safety
 * `p` must be a live handle; `out` must be valid for writes.
 */
enum GcStatus gc_partition_hook(const struct GcPartition *p, size_t i, size_t j, size_t *out);

/**
 * The `l`-admissible partition whose row counts of small hooks are `nu`,
 * a weakly decreasing sequence of at most `r` entries below `l`.
 *
 * # Safety
 * `nu` must point to `len` values; `out` must be valid for writes.
 */
enum GcStatus gc_hat(const size_t *nu, size_t len, size_t l, size_t r, struct GcPartition **out);

/**
 * Computes the table for `G(r, e)` and twist `l`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum GcStatus gc_cohomology_table_new(size_t r, size_t e, size_t l, struct GcCohomologyTable **out);

/**
 * # Safety
 * `t` must come from this library and not be used afterwards. Null is ignored.
 */
void gc_cohomology_table_free(struct GcCohomologyTable *t);

/**
 * # Safety
 * `t` must be a live handle; `out` must be valid for writes.
 */
enum GcStatus gc_cohomology_table_len(const struct GcCohomologyTable *t, size_t *out);

/**
 * Component `index`: its bidegree and its highest weight (`e` entries).
 *
 * # Safety
 * `t` must be a live handle; `p`, `q`, `out_len` must be valid; `weight` must have room for `cap` values.
 */
enum GcStatus gc_cohomology_table_component(const struct GcCohomologyTable *t,
                                            size_t index,
                                            size_t *p,
                                            size_t *q,
                                            int64_t *weight,
                                            size_t cap,
                                            size_t *out_len);

/**
 * Largest weight of an `l`-admissible partition in the `r × (n−r)` box.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum GcStatus gc_pmax(size_t r, size_t n, size_t l, size_t *out);

/**
 * `Q(p, σ)`: `H^{p,q}` vanishes for `q` above it.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum GcStatus gc_bound_q(uint64_t n,
                         uint64_t p,
                         uint64_t sigma,
                         uint64_t a,
                         uint64_t e,
                         uint64_t k,
                         int64_t *out);

/**
 * Number of `s`-element subsets of `{1..r}` with sum `pi`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum GcStatus gc_n_s(uint64_t r, uint64_t s, int64_t pi, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRASSCOH_H */
