#ifndef CHROMA_H
#define CHROMA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ChromaFamily {
  /**
   * Graphs without the subdivided H-graph with parameters `m` and `k`.
   */
  CHROMA_FAMILY_H = 0,
  /**
   * Graphs without the subdivided star with parameter `k`.
   */
  CHROMA_FAMILY_S = 1,
} ChromaFamily;

typedef enum ChromaStatus {
  CHROMA_STATUS_OK = 0,
  CHROMA_STATUS_NULL_POINTER = 1,
  CHROMA_STATUS_INVALID_INPUT = 2,
  CHROMA_STATUS_INVALID_PARAMS = 3,
  CHROMA_STATUS_CAP_EXCEEDED = 4,
  CHROMA_STATUS_BUFFER_TOO_SMALL = 5,
  CHROMA_STATUS_PANIC = 6,
} ChromaStatus;

typedef enum ChromaVerdict {
  CHROMA_VERDICT_YES = 0,
  CHROMA_VERDICT_NO = 1,
  CHROMA_VERDICT_CAP_EXCEEDED = 2,
} ChromaVerdict;

/**
 * Opaque solver result.
 */
typedef struct ChromaDecision ChromaDecision;

/**
 * Opaque graph handle.
 */
typedef struct ChromaGraph ChromaGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread. Valid until the next
 * call on the same thread; never null.
 */
const char *chroma_last_error(void);

/**
 * Builds a graph on `0..n` from `m` edges given as `2*m` endpoint ids.
 *
 * # Safety
 * `edges` must point to `2*m` readable values (or be null when `m == 0`);
 * `out` must be writable.
 */
enum ChromaStatus chroma_graph_new(size_t n,
                                   const uint32_t *edges,
                                   size_t m,
                                   struct ChromaGraph **out);

/**
 * Parses DIMACS `.col` text.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum ChromaStatus chroma_graph_from_dimacs(const char *text, struct ChromaGraph **out);

/**
 * # Safety
 * `g` must come from a `chroma_graph_*` constructor and not be freed yet.
 */
void chroma_graph_free(struct ChromaGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle or null.
 */
size_t chroma_graph_vertex_count(const struct ChromaGraph *g);

/**
 * # Safety
 * `g` must be a live graph handle or null.
 */
size_t chroma_graph_edge_count(const struct ChromaGraph *g);

/**
 * Decides `r`-colourability. A cap of 0 selects the default.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum ChromaStatus chroma_solve_colouring(const struct ChromaGraph *g,
                                         enum ChromaFamily family,
                                         uint32_t m,
                                         uint32_t k,
                                         uint32_t r,
                                         uint32_t cap,
                                         bool fallback,
                                         struct ChromaDecision **out);

/**
 * Decides whether some independent set disconnects the graph.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum ChromaStatus chroma_solve_stable_cut(const struct ChromaGraph *g,
                                          uint32_t cap,
                                          bool fallback,
                                          struct ChromaDecision **out);

/**
 * # Safety
 * `d` must be a live decision handle.
 */
enum ChromaVerdict chroma_decision_verdict(const struct ChromaDecision *d);

/**
 * Copies the certificate of a Yes decision into `buf`: one colour per vertex
 * id for colourings, the cut vertices for stable cuts. `written` receives the
 * required length even when the buffer is too small.
 *
 * # Safety
 * `d` must be a live decision handle; `buf` must hold `len` values;
 * `written` must be writable.
 */
enum ChromaStatus chroma_decision_certificate(const struct ChromaDecision *d,
                                              uint32_t *buf,
                                              size_t len,
                                              size_t *written);

/**
 * The decision as a JSON record. Release with [`chroma_string_free`].
 *
 * # Safety
 * `d` must be a live decision handle or null.
 */
char *chroma_decision_json(const struct ChromaDecision *d);

/**
 * # Safety
 * `d` must come from a solver call and not be freed yet.
 */
void chroma_decision_free(struct ChromaDecision *d);

/**
 * # Safety
 * `s` must come from this library and not be freed yet.
 */
void chroma_string_free(char *s);

/**
 * Exact treedepth, or [`ChromaStatus::CapExceeded`] if it is above `cap`.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must be writable.
 */
enum ChromaStatus chroma_treedepth(const struct ChromaGraph *g, uint32_t cap, uint32_t *out);

/**
 * Whether the graph has no subgraph matching `spec`, e.g. `"S(1,2,2,2)"`.
 *
 * # Safety
 * `g` must be a live graph handle; `spec` a NUL-terminated string; `out`
 * writable.
 */
enum ChromaStatus chroma_is_free(const struct ChromaGraph *g, const char *spec, bool *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CHROMA_H */
