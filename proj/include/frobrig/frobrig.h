/*
 * C interface to the frobrig engine.
 *
 * Handles are opaque. Every call returns a frobrig_status; on failure the
 * message is available from frobrig_last_error() on the calling thread.
 * Strings returned through char** out-parameters are owned by the caller
 * and must be released with frobrig_string_free().
 *
 * A ring or module handle may be shared between threads for reading, but a
 * module handle caches its resolution and must not be used concurrently.
 */
#ifndef FROBRIG_H
#define FROBRIG_H

#include <stddef.h>
#include <stdint.h>

#if defined(FROBRIG_BUILDING_LIBRARY)
#define FROBRIG_API __attribute__((visibility("default")))
#else
#define FROBRIG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum frobrig_status {
  FROBRIG_OK = 0,
  FROBRIG_E_PARSE = 1,
  FROBRIG_E_INVALID_ARGUMENT = 2,
  FROBRIG_E_ZERO_RING = 3,
  FROBRIG_E_CAP_TOO_SMALL = 4,
  FROBRIG_E_NOT_ARTINIAN = 5,
  FROBRIG_E_CAP_UNSTABLE = 6,
  FROBRIG_E_CONTAINMENT = 7,
  FROBRIG_E_NOT_REGULAR = 8,
  FROBRIG_E_POSITIVE_DEPTH = 9,
  FROBRIG_E_NOT_APPLICABLE = 10,
  FROBRIG_E_IO = 11,
  FROBRIG_E_INTERNAL = 99
} frobrig_status;

typedef enum frobrig_format { FROBRIG_FORMAT_TEXT = 0, FROBRIG_FORMAT_JSON = 1 } frobrig_format;

/* Tor length markers used by frobrig_tor_lengths. */
#define FROBRIG_LENGTH_INFINITE (-1)
#define FROBRIG_LENGTH_UNSTABLE (-2)

typedef struct frobrig_ring frobrig_ring;
typedef struct frobrig_module frobrig_module;

FROBRIG_API const char* frobrig_version(void);
FROBRIG_API const char* frobrig_status_name(frobrig_status status);
/* Message of the last failed call on this thread ("" if none). */
FROBRIG_API const char* frobrig_last_error(void);
/* Warnings produced by the last call on this thread, newline separated. */
FROBRIG_API const char* frobrig_last_warnings(void);
FROBRIG_API void frobrig_string_free(char* s);

/* Ring documents: a ring line followed by optional `module NAME = ...`
 * lines. cap_override <= 0 keeps the cap written in the text. */
FROBRIG_API frobrig_status frobrig_ring_parse(const char* text, int cap_override, frobrig_ring** out);
FROBRIG_API void frobrig_ring_free(frobrig_ring* ring);
FROBRIG_API frobrig_status frobrig_ring_describe(const frobrig_ring* ring, char** out);
FROBRIG_API frobrig_status frobrig_ring_dim(const frobrig_ring* ring, size_t* out);
FROBRIG_API frobrig_status frobrig_ring_is_artinian(const frobrig_ring* ring, int* out);
FROBRIG_API frobrig_status frobrig_ring_module_count(const frobrig_ring* ring, size_t* out);
/* Name of the i-th module defined in the document; borrowed pointer. */
FROBRIG_API frobrig_status frobrig_ring_module_name(const frobrig_ring* ring, size_t index, const char** out);

/* InvariantReport of the ring. */
FROBRIG_API frobrig_status frobrig_check(const frobrig_ring* ring, frobrig_format format, char** out);

/* A module by name from the document, or an inline expression such as
 * `k`, `free 2` or `coker [[x, y]]`. */
FROBRIG_API frobrig_status frobrig_module_get(const frobrig_ring* ring, const char* name_or_expression,
                                              frobrig_module** out);
FROBRIG_API void frobrig_module_free(frobrig_module* module);
FROBRIG_API frobrig_status frobrig_module_is_free(const frobrig_module* module, int* out);

/* Betti numbers l_0..l_N written to ranks[0..N]; capacity must be >= N + 1. */
FROBRIG_API frobrig_status frobrig_betti(frobrig_module* module, size_t N, size_t* ranks, size_t capacity);
FROBRIG_API frobrig_status frobrig_resolve(frobrig_module* module, size_t N, frobrig_format format, char** out);

/* Lengths of Tor_j(M, ^{phi^r}R) for j = 0..N, with the markers above. */
FROBRIG_API frobrig_status frobrig_tor_lengths(frobrig_module* module, int r, size_t N, int64_t* lengths,
                                               size_t capacity);
FROBRIG_API frobrig_status frobrig_tor(frobrig_module* module, int r, size_t N, frobrig_format format, char** out);
/* *flagged is set to 1 when a rigidity statement is contradicted. */
FROBRIG_API frobrig_status frobrig_rigidity(frobrig_module* module, int r, size_t N, frobrig_format format, char** out,
                                            int* flagged);
FROBRIG_API frobrig_status frobrig_ratio(frobrig_module* module, int r, size_t N, frobrig_format format, char** out);
/* *all_equal is set to 1 when both sides agree for every j. */
FROBRIG_API frobrig_status frobrig_balance(frobrig_module* module, int r, size_t N, frobrig_format format, char** out,
                                           int* all_equal);

typedef struct frobrig_search_params {
  const char* family; /* "mixed", "msq0", "depth1" or "artinian"; NULL = mixed */
  uint64_t seed;
  size_t trials;
  size_t max_vars;
  int max_relation_degree;
  size_t max_module_size;
  const int* r_values;
  size_t r_count;
  size_t N;
} frobrig_search_params;

FROBRIG_API void frobrig_search_params_default(frobrig_search_params* params);
FROBRIG_API frobrig_status frobrig_search(const frobrig_search_params* params, frobrig_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* FROBRIG_H */
