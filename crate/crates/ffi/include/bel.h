#ifndef BEL_H
#define BEL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Graph classes answerable by `bel_graph_is`.
 */
typedef enum BelClass {
  BEL_CLASS_TREE = 0,
  BEL_CLASS_CATERPILLAR = 1,
  BEL_CLASS_BLOCK_GRAPH = 2,
  BEL_CLASS_NET_FREE = 3,
  BEL_CLASS_GENERALIZED_CATERPILLAR = 4,
  BEL_CLASS_CLOSED = 5,
  BEL_CLASS_WEAKLY_CLOSED = 6,
  BEL_CLASS_COMPARABILITY = 7,
  /**
   * Exactly two associated primes; requires a connected graph.
   */
  BEL_CLASS_ASS_TWO = 8,
} BelClass;

typedef enum BelStatus {
  BEL_STATUS_OK = 0,
  BEL_STATUS_NULL_POINTER = 1,
  BEL_STATUS_INVALID_UTF8 = 2,
  BEL_STATUS_PARSE_ERROR = 3,
  BEL_STATUS_INVALID_GRAPH = 4,
  BEL_STATUS_SIZE_CAP = 5,
  BEL_STATUS_NOT_IN_CLASS = 6,
  BEL_STATUS_INVALID_ARGUMENT = 7,
  BEL_STATUS_PANIC = 8,
} BelStatus;

/**
 * Opaque graph handle.
 */
typedef struct BelGraph BelGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty if none. Valid
 * until the next failing call on the same thread.
 */
const char *bel_last_error(void);

/**
 * Parse a graph in the edge-list text format.
 *
 * # Safety
 * `text` must be a valid nul-terminated string and `out` writable.
 */
enum BelStatus bel_graph_parse(const char *text, struct BelGraph **out);

/**
 * Build a graph on `1..=n` from `edge_count` pairs stored flat in `edges`.
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or be null when
 * `edge_count` is zero) and `out` must be writable.
 */
enum BelStatus bel_graph_from_edges(size_t n,
                                    const size_t *edges,
                                    size_t edge_count,
                                    struct BelGraph **out);

/**
 * # Safety
 * `g` must come from this library and not have been freed; null is ignored.
 */
void bel_graph_free(struct BelGraph *g);

/**
 * # Safety
 * `g` must be a live handle or null (which yields 0).
 */
size_t bel_graph_vertex_count(const struct BelGraph *g);

/**
 * # Safety
 * `g` must be a live handle or null (which yields 0).
 */
size_t bel_graph_edge_count(const struct BelGraph *g);

/**
 * Membership of `g` in a graph class.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum BelStatus bel_graph_is(const struct BelGraph *g, enum BelClass class_, bool *out);

/**
 * Full classification report as JSON.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum BelStatus bel_classify_json(const struct BelGraph *g, char **out);

/**
 * Reduced Gröbner basis of `J_G`, one element per line. `field` is `"q"`,
 * `"fp:<p>"` or null for the rationals.
 *
 * # Safety
 * `g` must be a live handle, `field` null or a valid string, `out` writable.
 */
enum BelStatus bel_groebner_basis(const struct BelGraph *g, const char *field, char **out);

/**
 * Compare `J_G^t` with `J_G^(t)`. When they differ and `witness` is non-null,
 * a polynomial in the symbolic power but not the ordinary one is stored
 * there; otherwise `*witness` is set to null.
 *
 * # Safety
 * `g` must be a live handle, `field` null or a valid string, `equal`
 * writable and `witness` null or writable.
 */
enum BelStatus bel_powers_equal(const struct BelGraph *g,
                                size_t t,
                                const char *field,
                                bool *equal,
                                char **witness);

/**
 * # Safety
 * `s` must come from this library and not have been freed; null is ignored.
 */
void bel_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BEL_H */
