#ifndef LENS_SKEIN_H
#define LENS_SKEIN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LsStatus {
  LS_STATUS_OK = 0,
  LS_STATUS_NULL_POINTER = 1,
  LS_STATUS_INVALID_UTF8 = 2,
  LS_STATUS_PARSE = 3,
  LS_STATUS_DIVISION_BY_ZERO = 4,
  LS_STATUS_INDEX_OUT_OF_RANGE = 5,
  LS_STATUS_STRAND_MISMATCH = 6,
  LS_STATUS_MAP_I_DOMAIN = 7,
  LS_STATUS_DOMAIN = 8,
  // A verification suite ran and found a failure.
  LS_STATUS_VERIFY_FAILED = 9,
  LS_STATUS_PANIC = 10,
} LsStatus;

// An element of the Hecke algebra in normal form.
typedef struct LsElement LsElement;

// A trace value: a polynomial in the `s_k` over Q(q,z).
typedef struct LsTrace LsTrace;

// A mixed braid word.
typedef struct LsWord LsWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or an empty string.
// The pointer stays valid until the next call on the same thread.
const char *ls_last_error(void);

// # Safety
// `s` must come from this library or be null.
void ls_string_free(char *s);

// Parses a word. `n` is the number of moving strands, 0 to infer it.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum LsStatus ls_word_parse(const char *text, size_t n, struct LsWord **out);

// # Safety
// `w` must come from this library or be null.
void ls_word_free(struct LsWord *w);

// # Safety
// `w` must be a live handle; `out` must be writable.
enum LsStatus ls_word_to_string(const struct LsWord *w, char **out);

// The image of the word under f.
//
// # Safety
// `w` must be a live handle; `out` must be writable.
enum LsStatus ls_word_fmap(const struct LsWord *w, struct LsWord **out);

// # Safety
// `w` must be a live handle; `out` must be writable.
enum LsStatus ls_element_from_word(const struct LsWord *w, struct LsElement **out);

// # Safety
// `e` must come from this library or be null.
void ls_element_free(struct LsElement *e);

// # Safety
// `e` must be a live handle; `out` must be writable.
enum LsStatus ls_element_to_string(const struct LsElement *e, char **out);

// # Safety
// `e` must be a live handle; `out` must be writable.
enum LsStatus ls_element_to_json(const struct LsElement *e, char **out);

// # Safety
// `e` must be a live handle; `out` must be writable.
enum LsStatus ls_element_trace(const struct LsElement *e, struct LsTrace **out);

// Parses a trace value from its JSON form.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum LsStatus ls_trace_from_json(const char *json, struct LsTrace **out);

// # Safety
// `t` must come from this library or be null.
void ls_trace_free(struct LsTrace *t);

// # Safety
// `t` must be a live handle; `out` must be writable.
enum LsStatus ls_trace_to_string(const struct LsTrace *t, char **out);

// # Safety
// `t` must be a live handle; `out` must be writable.
enum LsStatus ls_trace_to_json(const struct LsTrace *t, char **out);

// Writes 1 to `out` when the two values are equal, 0 otherwise.
//
// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum LsStatus ls_trace_equal(const struct LsTrace *a, const struct LsTrace *b, int32_t *out);

// Applies the map I for `L(p,1)`. With `band` nonzero, indices above `p`
// are accepted as they occur in band-move traces.
//
// # Safety
// `t` must be a live handle; `out` must be writable.
enum LsStatus ls_trace_map_i(const struct LsTrace *t,
                             uint32_t p,
                             int32_t band,
                             struct LsTrace **out);

// Generates and reduces the positive-side system for `L(p,1)` up to
// level `k_max` and writes the result as JSON.
//
// # Safety
// `out` must be writable.
enum LsStatus ls_reduce_json(uint32_t p, uint32_t k_max, char **out);

// Runs a verification suite with its default parameters, overriding `p`
// when nonzero, and writes the report as JSON. Returns
// [`LsStatus::VerifyFailed`] when the suite finds a failure; the report
// is written in that case too.
//
// # Safety
// `suite` must be a NUL-terminated string; `out` must be writable.
enum LsStatus ls_verify(const char *suite, uint32_t p, char **out);

// Library version as a static NUL-terminated string.
const char *ls_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LENS_SKEIN_H */
