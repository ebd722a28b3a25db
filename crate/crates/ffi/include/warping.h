#ifndef WARPING_H
#define WARPING_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum WdStatus {
  WD_STATUS_OK = 0,
  WD_STATUS_NULL_POINTER = 1,
  WD_STATUS_INVALID_UTF8 = 2,
  WD_STATUS_PARSE_ERROR = 3,
  WD_STATUS_INVALID_ARGUMENT = 4,
  WD_STATUS_TOO_LARGE = 5,
  WD_STATUS_NOT_APPLICABLE = 6,
  WD_STATUS_INTERNAL = 7,
} WdStatus;

/**
 * Opaque diagram handle.
 */
typedef struct WdDiagram WdDiagram;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a diagram in the text format into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum WdStatus wd_diagram_parse(const char *text, struct WdDiagram **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `handle` must come from `wd_diagram_parse` and not be used afterwards.
 */
void wd_diagram_free(struct WdDiagram *handle);

/**
 * Component, crossing and non-self crossing counts.
 *
 * # Safety
 * `handle` must be a live handle; the outputs must be valid pointers.
 */
enum WdStatus wd_diagram_counts(const struct WdDiagram *handle,
                                size_t *components,
                                size_t *crossings,
                                size_t *linking_crossings);

/**
 * `d(D)`; pass `inverse != 0` for `d(-D)`.
 *
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer.
 */
enum WdStatus wd_warping_degree(const struct WdDiagram *handle, int32_t inverse, size_t *out);

/**
 * Linking warping degree `ld(D)`.
 *
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer.
 */
enum WdStatus wd_linking_warping_degree(const struct WdDiagram *handle, size_t *out);

/**
 * `d(|D|)`, minimized over orientations.
 *
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer.
 */
enum WdStatus wd_unoriented_warping_degree(const struct WdDiagram *handle, size_t *out);

/**
 * Twice the linking number of components `i` and `j` (0-based).
 *
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer.
 */
enum WdStatus wd_linking_number_twice(const struct WdDiagram *handle,
                                      size_t i,
                                      size_t j,
                                      int64_t *out);

/**
 * The diagram as JSON. Free the result with `wd_string_free`.
 *
 * # Safety
 * `handle` must be a live handle and `out` a valid pointer.
 */
enum WdStatus wd_diagram_to_json(const struct WdDiagram *handle, char **out);

/**
 * Reports for every applicable claim, as a JSON array. `all_hold` receives
 * 1 if every claim holds, else 0. Free the string with `wd_string_free`.
 *
 * # Safety
 * `handle` must be a live handle; the outputs must be valid pointers.
 */
enum WdStatus wd_verify_json(const struct WdDiagram *handle, int32_t *all_hold, char **out);

/**
 * Cancels `ou` factors of an o/u word. Free the result with `wd_string_free`.
 *
 * # Safety
 * `word` must be a NUL-terminated string and `out` a valid pointer.
 */
enum WdStatus wd_normalize_word(const char *word, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void wd_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into the library from the same thread.
 */
const char *wd_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WARPING_H */
