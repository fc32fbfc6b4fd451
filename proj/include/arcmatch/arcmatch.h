/* C interface to the arcmatch library.
 *
 * Matchings are opaque handles. Every fallible call returns an am_status;
 * on failure am_last_error() holds a one-line message for the calling
 * thread. Strings and edge arrays returned through out-parameters are
 * heap-allocated and released with am_free(). Edge arrays are flat
 * (left, right) vertex pairs with 1-based vertices.
 */
#ifndef ARCMATCH_H
#define ARCMATCH_H

#include <stddef.h>
#include <stdint.h>

#if defined(ARCMATCH_BUILDING_LIBRARY)
#define ARCMATCH_API __attribute__((visibility("default")))
#else
#define ARCMATCH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum am_status {
  AM_OK = 0,
  AM_ERR_DUPLICATE_VERTEX,
  AM_ERR_SELF_LOOP,
  AM_ERR_GAP_IN_VERTEX_SET,
  AM_ERR_VERTEX_OUT_OF_RANGE,
  AM_ERR_SHARED_VERTEX,
  AM_ERR_UNKNOWN_EDGE,
  AM_ERR_EMPTY_SEGMENT,
  AM_ERR_DUPLICATE_PIN,
  AM_ERR_NOT_INDECOMPOSABLE,
  AM_ERR_NOT_RIGHT_REACHING,
  AM_ERR_SIZE_TOO_SMALL,
  AM_ERR_DUPLICATE_VALUE,
  AM_ERR_INSUFFICIENT_CROSSERS,
  AM_ERR_SIZE_CAP_EXCEEDED,
  AM_ERR_PARSE,
  AM_ERR_EMPTY_MATCHING,
  AM_ERR_INVALID_CERTIFICATE,
  AM_ERR_INVALID_ARGUMENT,
  AM_ERR_INTERNAL
} am_status;

typedef enum am_text_form { AM_FORM_EDGE_LIST = 0, AM_FORM_CHORD_WORD = 1 } am_text_form;

typedef enum am_pattern_kind {
  AM_PATTERN_INTERLEAVING = 0,
  AM_PATTERN_RIGHT_BROKEN_NESTING = 1,
  AM_PATTERN_LEFT_BROKEN_NESTING = 2,
  AM_PATTERN_NESTING = 3
} am_pattern_kind;

enum {
  AM_FLAG_PIN_SEQUENCE = 1u,
  AM_FLAG_PROPER = 2u,
  AM_FLAG_RIGHT_REACHING = 4u
};

typedef struct am_matching am_matching;
typedef struct am_stream am_stream;

typedef struct am_census_row {
  uint32_t n;
  uint64_t total;
  uint64_t indecomposable;
  uint64_t recurrence_value;
  int agrees;
} am_census_row;

ARCMATCH_API const char* am_version(void);
ARCMATCH_API const char* am_status_name(am_status status);
ARCMATCH_API const char* am_last_error(void);
/* Offending vertex, or character position for AM_ERR_PARSE; 0 if none. */
ARCMATCH_API long am_last_error_detail(void);
ARCMATCH_API void am_free(void* ptr);

/* Matchings */
ARCMATCH_API am_status am_matching_from_pairs(const int32_t* vertices, size_t pair_count, am_matching** out);
ARCMATCH_API am_status am_matching_parse(const char* text, am_matching** out);
ARCMATCH_API void am_matching_free(am_matching* m);
ARCMATCH_API size_t am_matching_edge_count(const am_matching* m);
ARCMATCH_API am_status am_matching_partner(const am_matching* m, int32_t v, int32_t* out);
ARCMATCH_API am_status am_matching_edges(const am_matching* m, int32_t** out, size_t* pair_count);
ARCMATCH_API am_status am_matching_format(const am_matching* m, am_text_form form, char** out);
ARCMATCH_API am_status am_matching_equal(const am_matching* a, const am_matching* b, int* out);

/* Intervals and containment */
ARCMATCH_API am_status am_is_indecomposable(const am_matching* m, int* out);
ARCMATCH_API am_status am_find_intervals(const am_matching* m, int32_t** out, size_t* count);
ARCMATCH_API am_status am_contains(const am_matching* m, const am_matching* pattern, int* found, int32_t** out,
                                   size_t* pair_count);

/* Pins */
ARCMATCH_API am_status am_grow_right_reaching(const am_matching* m, int32_t left, int32_t right, int32_t** out,
                                              size_t* pair_count);
ARCMATCH_API am_status am_properize(const am_matching* m, const int32_t* pins, size_t pin_count, int32_t** out,
                                    size_t* pair_count);
ARCMATCH_API am_status am_classify_sequence(const am_matching* m, const int32_t* pins, size_t pin_count,
                                            unsigned* flags);
ARCMATCH_API am_status am_count_proper_rr_sequences(const am_matching* m, uint64_t* out);

/* Patterns */
ARCMATCH_API am_status am_pattern_kind_parse(const char* name, am_pattern_kind* out);
ARCMATCH_API am_status am_canonical(am_pattern_kind kind, size_t k, am_matching** out);
/* Canonical edges in semantic order (broken nestings: breaker first). */
ARCMATCH_API am_status am_canonical_text(am_pattern_kind kind, size_t k, char** out);
ARCMATCH_API am_status am_max_pattern(const am_matching* m, am_pattern_kind kind, size_t* size, int32_t** out,
                                      size_t* pair_count);

/* Witnesses and certificates (JSON documents, schema_version 1) */
ARCMATCH_API am_status am_bounds(size_t k, char** json_out);
ARCMATCH_API am_status am_witness_certificate(const am_matching* m, size_t k, char** json_out);
/* AM_OK when valid; AM_ERR_INVALID_CERTIFICATE with the reason otherwise. */
ARCMATCH_API am_status am_verify_certificate(const char* json, char** reason_out);

/* Exhaustive runs; jobs >= 1 worker threads. */
ARCMATCH_API am_status am_stream_create(size_t n, int allow_large, am_stream** out);
/* Sets *out to NULL once the stream is exhausted. */
ARCMATCH_API am_status am_stream_next(am_stream* stream, am_matching** out);
ARCMATCH_API void am_stream_free(am_stream* stream);
ARCMATCH_API am_status am_census(size_t n, size_t jobs, int allow_large, am_census_row* out);
ARCMATCH_API am_status am_scan_avoiders(size_t n_max, size_t k, size_t jobs, int allow_large, char** json_out);
ARCMATCH_API am_status am_verify_theorem(size_t n_max, size_t k, size_t jobs, int allow_large, char** json_out,
                                         int* passed);

/* Rendering */
ARCMATCH_API am_status am_render_svg(const am_matching* m, const int32_t* highlight, size_t highlight_count,
                                     char** svg_out);

#ifdef __cplusplus
}
#endif

#endif /* ARCMATCH_H */
