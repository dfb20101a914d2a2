#ifndef BLOCKSPEC_H
#define BLOCKSPEC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BsGraphKind {
  BS_GRAPH_KIND_MUTUAL = 0,
  BS_GRAPH_KIND_MERGED_SELF = 1,
  BS_GRAPH_KIND_INTERSECTION = 2,
  BS_GRAPH_KIND_S_INTERSECTION = 3,
} BsGraphKind;

typedef enum BsMatrixFormat {
  BS_MATRIX_FORMAT_CSV = 0,
  BS_MATRIX_FORMAT_JSON = 1,
} BsMatrixFormat;

typedef enum BsProduct {
  BS_PRODUCT_NONE = 0,
  BS_PRODUCT_MMT = 1,
  BS_PRODUCT_MTM = 2,
} BsProduct;

typedef enum BsStatus {
  BS_STATUS_OK = 0,
  BS_STATUS_NULL_POINTER = 1,
  BS_STATUS_INVALID_UTF8 = 2,
  BS_STATUS_PARSE_ERROR = 3,
  BS_STATUS_INVALID_DESIGN = 4,
  BS_STATUS_MISMATCHED_POINT_SETS = 5,
  BS_STATUS_INVALID_ARGUMENT = 6,
  BS_STATUS_CHECK_FAILED = 7,
  BS_STATUS_INTERNAL = 8,
} BsStatus;

/**
 * Opaque validated design.
 */
typedef struct BsDesign BsDesign;

/**
 * Parameters `(v, b, r, k, lambda)` of a design.
 */
typedef struct BsParams {
  uint64_t v;
  uint64_t b;
  uint64_t r;
  uint64_t k;
  uint64_t lambda;
} BsParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next `bs_*` call on the same thread.
 */
const char *bs_last_error(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 */
void bs_string_free(char *s);

/**
 * Parses and validates a design file (`{"v": .., "blocks": [[..], ..]}`).
 */
enum BsStatus bs_design_from_json(const char *json, struct BsDesign **out);

/**
 * Builds a design from a fixture name or construction expression such as
 * `complement(fano)` or `cyclic(11,1,3,4,5,9)`.
 */
enum BsStatus bs_design_construct(const char *expr, struct BsDesign **out);

/**
 * Releases a design. NULL is ignored.
 */
void bs_design_free(struct BsDesign *d);

enum BsStatus bs_design_params(const struct BsDesign *d, struct BsParams *out);

/**
 * Canonical design-file JSON.
 */
enum BsStatus bs_design_to_json(const struct BsDesign *d, char **out);

/**
 * `M(d1, d2)`, `M·Mᵀ` or `Mᵀ·M` as CSV or JSON text.
 */
enum BsStatus bs_mutual_matrix(const struct BsDesign *d1,
                               const struct BsDesign *d2,
                               enum BsProduct product,
                               enum BsMatrixFormat format,
                               char **out);

/**
 * Full spectral report for `M(d1, d2)·M(d1, d2)ᵀ` as JSON. A report whose
 * checks fail still returns `BS_STATUS_OK`; inspect `overall`.
 */
enum BsStatus bs_verify_spectrum(const struct BsDesign *d1,
                                 const struct BsDesign *d2,
                                 char **out_json,
                                 bool *overall);

/**
 * Like `bs_verify_spectrum(d, d)` plus the eigendata of `M(d, d)`.
 */
enum BsStatus bs_self_spectrum(const struct BsDesign *d, char **out_json, bool *overall);

/**
 * DOT text for a block graph. `d2` is required for `BS_GRAPH_KIND_MUTUAL`
 * and ignored otherwise; `sizes` (length `n_sizes`) is the intersection-size
 * set for `BS_GRAPH_KIND_S_INTERSECTION`.
 */
enum BsStatus bs_graph_dot(enum BsGraphKind kind,
                           const struct BsDesign *d1,
                           const struct BsDesign *d2,
                           const size_t *sizes,
                           size_t n_sizes,
                           char **out);

/**
 * Recomputes worked example `which` (1, 2 or 3; 0 for all) and writes the
 * report text. `ok` is false when any golden value disagrees.
 */
enum BsStatus bs_paper_examples(uint32_t which, char **out_text, bool *ok);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BLOCKSPEC_H */
