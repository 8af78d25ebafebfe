#ifndef P6BULL_H
#define P6BULL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes of every entry point.
 */
typedef enum P6bError {
  P6B_ERROR_OK = 0,
  P6B_ERROR_NULL_POINTER = 1,
  P6B_ERROR_INVALID_VERTEX = 2,
  P6B_ERROR_SELF_LOOP = 3,
  P6B_ERROR_PARSE = 4,
  P6B_ERROR_INVALID_UTF8 = 5,
  /**
   * An out-buffer is too short; the required length was written back.
   */
  P6B_ERROR_BUFFER_TOO_SMALL = 6,
  P6B_ERROR_NO_COLORING = 7,
  P6B_ERROR_CONTRACT = 8,
  P6B_ERROR_PANIC = 9,
} P6bError;

/**
 * Mirrors the four verdicts; values match the command-line exit codes.
 */
typedef enum P6bStatus {
  P6B_STATUS_FOUR_COLORABLE = 0,
  P6B_STATUS_NOT_FOUR_COLORABLE = 1,
  P6B_STATUS_OUT_OF_CLASS = 2,
  P6B_STATUS_INVARIANT_VIOLATION = 3,
} P6bStatus;

/**
 * Opaque graph handle.
 */
typedef struct P6bGraph P6bGraph;

/**
 * Opaque outcome handle.
 */
typedef struct P6bOutcome P6bOutcome;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`u0, v0, u1, v1, ...`). `edges` may be null when `edge_count`
 * is 0.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values; `out` must be
 * writable.
 */
enum P6bError p6b_graph_new(size_t n,
                            const uint32_t *edges,
                            size_t edge_count,
                            struct P6bGraph **out);

/**
 * Parses a NUL-terminated DIMACS text.
 *
 * # Safety
 * `text` must be a valid C string; `out` must be writable.
 */
enum P6bError p6b_graph_from_dimacs(const char *text, struct P6bGraph **out);

/**
 * Vertex count of `graph`.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum P6bError p6b_graph_order(const struct P6bGraph *graph, size_t *out);

/**
 * Releases a graph. Null is ignored.
 *
 * # Safety
 * `graph` must be null or a handle not yet freed.
 */
void p6b_graph_free(struct P6bGraph *graph);

/**
 * Decides 4-colourability. With `force` nonzero the class check is
 * skipped and the answer carries no guarantee.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum P6bError p6b_decide(const struct P6bGraph *graph, int32_t force, struct P6bOutcome **out);

/**
 * # Safety
 * `outcome` must be a live handle; `out` must be writable.
 */
enum P6bError p6b_outcome_status(const struct P6bOutcome *outcome, enum P6bStatus *out);

/**
 * Copies the colouring into `colors`. `len` holds the buffer length on
 * entry and the vertex count on return. Fails with `NoColoring` unless the
 * status is four-colourable.
 *
 * # Safety
 * `outcome` must be a live handle; `len` must be writable; `colors` must
 * hold `*len` writable bytes or be null when `*len` is 0.
 */
enum P6bError p6b_outcome_coloring(const struct P6bOutcome *outcome, uint8_t *colors, size_t *len);

/**
 * The JSON report as a new C string, released with [`p6b_string_free`].
 *
 * # Safety
 * `outcome` must be a live handle; `out` must be writable.
 */
enum P6bError p6b_outcome_json(const struct P6bOutcome *outcome, char **out);

/**
 * # Safety
 * `outcome` must be null or a handle not yet freed.
 */
void p6b_outcome_free(struct P6bOutcome *outcome);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void p6b_string_free(char *s);

/**
 * Sets `*valid` to 1 iff `colors` (length `len`, colours in 1..=4) is a
 * proper colouring of `graph`, else 0.
 *
 * # Safety
 * `graph` must be a live handle; `colors` must hold `len` readable bytes;
 * `valid` must be writable.
 */
enum P6bError p6b_verify_coloring(const struct P6bGraph *graph,
                                  const uint8_t *colors,
                                  size_t len,
                                  int32_t *valid);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* P6BULL_H */
