/* SPDX-License-Identifier: Apache-2.0 */

#ifndef HOMPOLY_H
#define HOMPOLY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HpStandardKind {
  HP_STANDARD_KIND_SIMPLEX = 0,
  HP_STANDARD_KIND_CUBE = 1,
  HP_STANDARD_KIND_CROSS_POLYTOPE = 2,
  /**
   * Rounded to the requested number of decimal digits.
   */
  HP_STANDARD_KIND_REGULAR_NGON = 3,
} HpStandardKind;

typedef enum HpStatus {
  HP_STATUS_OK = 0,
  HP_STATUS_NULL_POINTER = 1,
  HP_STATUS_INVALID_ARGUMENT = 2,
  HP_STATUS_PARSE = 3,
  HP_STATUS_NOT_FULL_DIMENSIONAL = 4,
  HP_STATUS_GEOMETRY = 5,
  HP_STATUS_NOT_CONVEX = 6,
  HP_STATUS_UNSTABLE_PARTITION = 7,
  HP_STATUS_TOO_LARGE = 8,
  HP_STATUS_INTERNAL = 9,
  /**
   * A Rust panic was caught at the boundary.
   */
  HP_STATUS_PANIC = 10,
  /**
   * The caller's buffer is too small; the required length was written.
   */
  HP_STATUS_BUFFER_TOO_SMALL = 11,
} HpStatus;

/**
 * Opaque hom-polytope handle.
 */
typedef struct HpHom HpHom;

/**
 * Opaque polytope handle.
 */
typedef struct HpPolytope HpPolytope;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the last failed call on this thread, or null. The pointer
 * stays valid until the next call into the library on this thread.
 */
const char *hp_last_error(void);

/**
 * Library version as a static string.
 */
const char *hp_version(void);

/**
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void hp_string_free(char *s);

/**
 * Parses a polytope in the `V d k` / `H d k` text format.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` writable.
 */
enum HpStatus hp_polytope_parse(const char *text, struct HpPolytope **out);

/**
 * Builds a standard polytope; `digits` only applies to regular polygons.
 *
 * # Safety
 * `out` must be writable.
 */
enum HpStatus hp_polytope_standard(enum HpStandardKind kind,
                                   uint32_t n,
                                   uint32_t digits,
                                   struct HpPolytope **out);

/**
 * # Safety
 * `p` must come from this library and not have been freed.
 */
void hp_polytope_free(struct HpPolytope *p);

/**
 * # Safety
 * `p` must be a live handle; the outputs must be writable.
 */
enum HpStatus hp_polytope_dims(const struct HpPolytope *p, size_t *ambient, size_t *dim);

/**
 * Vertex and facet counts; facets are counted without redundant rows.
 *
 * # Safety
 * `p` must be a live handle; the outputs must be writable.
 */
enum HpStatus hp_polytope_counts(const struct HpPolytope *p, size_t *vertices, size_t *facets);

/**
 * Writes the polytope in the text format; release with [`hp_string_free`].
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum HpStatus hp_polytope_to_text(const struct HpPolytope *p, bool hrep, char **out);

/**
 * # Safety
 * `p` and `q` must be live handles and `out` writable.
 */
enum HpStatus hp_hom_build(const struct HpPolytope *p,
                           const struct HpPolytope *q,
                           struct HpHom **out);

/**
 * # Safety
 * `h` must come from this library and not have been freed.
 */
void hp_hom_free(struct HpHom *h);

/**
 * # Safety
 * `h` must be a live handle; the outputs must be writable.
 */
enum HpStatus hp_hom_dims(const struct HpHom *h, size_t *dim, size_t *inequalities);

/**
 * Vertex counts of the hom-polytope by rank of the map.
 *
 * `counts` receives `min(d, e) + 1` entries; when `len` is smaller, nothing
 * is written except `needed`, and `BufferTooSmall` is returned.
 *
 * # Safety
 * `h` must be a live handle, `counts` valid for `len` writes and `needed`
 * writable.
 */
enum HpStatus hp_hom_vertex_counts(const struct HpHom *h,
                                   uint64_t *counts,
                                   size_t len,
                                   size_t *needed);

/**
 * One row of the regular polygon table: vertex counts of `Hom(P_m, P_n)` by
 * rank after clustering with every threshold in the comma-separated `eps`.
 *
 * # Safety
 * `eps` must be a nul-terminated string and `counts` valid for 3 writes.
 */
enum HpStatus hp_table_row(uint32_t m,
                           uint32_t n,
                           uint32_t digits,
                           const char *eps,
                           uint64_t *counts);

/**
 * Enumerates the coincidence graphs and certifies each determinant;
 * `count` receives the number of certified graphs.
 *
 * # Safety
 * `count` must be writable.
 */
enum HpStatus hp_coincidence_certify(size_t *count);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOMPOLY_H */
