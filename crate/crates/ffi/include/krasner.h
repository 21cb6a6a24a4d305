#ifndef KRASNER_H
#define KRASNER_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum KrReading {
  KR_STRICT = 0,
  KR_LAX = 1,
} KrReading;

typedef enum KrStatus {
  KR_OK = 0,
  KR_NULL_ARGUMENT = 1,
  KR_INVALID_UTF8 = 2,
  KR_PARSE_ERROR = 3,
  KR_NOT_FOUND = 4,
  /**
   * The arguments are well formed but do not meet a precondition, e.g. a
   * set that is not a proper hyperideal.
   */
  KR_PRECONDITION = 5,
  KR_INTERNAL = 6,
} KrStatus;

/**
 * Opaque structure handle.
 */
typedef struct KrHyperring KrHyperring;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *kr_last_error(void);

/**
 * Library version as a static string.
 */
const char *kr_version(void);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void kr_string_free(char *s);

/**
 * Parse `.khr` text into a new handle.
 *
 * # Safety
 * `source` must be a NUL-terminated string and `out` writable.
 */
enum KrStatus kr_hyperring_parse(const char *source, struct KrHyperring **out);

/**
 * Look up a built-in structure such as `z12-mod-units` or `z6`.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` writable.
 */
enum KrStatus kr_hyperring_from_catalog(const char *name, struct KrHyperring **out);

/**
 * Release a handle. Null is ignored.
 *
 * # Safety
 * `h` must come from this library and not have been freed.
 */
void kr_hyperring_free(struct KrHyperring *h);

/**
 * Carrier size and arities.
 *
 * # Safety
 * `h` must be a live handle; the outputs must be writable.
 */
enum KrStatus kr_hyperring_shape(const struct KrHyperring *h, size_t *size, size_t *m, size_t *n);

/**
 * Canonical `.khr` text.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum KrStatus kr_hyperring_serialize(const struct KrHyperring *h, char **out);

/**
 * Axiom check. `passed` receives 1 or 0; `report` (optional) the JSON report.
 *
 * # Safety
 * `h` must be a live handle; `passed` writable; `report` null or writable.
 */
enum KrStatus kr_validate(const struct KrHyperring *h, int32_t *passed, char **report);

/**
 * All hyperideals as a JSON array of element-name arrays, in canonical order.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum KrStatus kr_ideals(const struct KrHyperring *h, char **out);

/**
 * Radical of the hyperideal named by a comma-separated element list, as `{a,b}` text.
 *
 * # Safety
 * `h` must be a live handle, `ideal` a NUL-terminated string and `out` writable.
 */
enum KrStatus kr_radical(const struct KrHyperring *h, const char *ideal, char **out);

/**
 * δ-N check for one proper hyperideal. `delta` is `d0`, `d1` or `dH`.
 * `holds` receives 1 or 0; `witness` (optional) the JSON report entry.
 *
 * # Safety
 * `h` must be a live handle; strings NUL-terminated; `holds` writable;
 * `witness` null or writable.
 */
enum KrStatus kr_is_delta_n(const struct KrHyperring *h,
                            const char *ideal,
                            const char *delta,
                            enum KrReading reading,
                            int32_t *holds,
                            char **witness);

/**
 * Full classification report of every proper hyperideal, as JSON.
 *
 * # Safety
 * `h` must be a live handle and `out` writable.
 */
enum KrStatus kr_classify(const struct KrHyperring *h, char **out);

/**
 * Run one registered statement over the catalog plus every (2,2)-structure
 * of size up to `search_max`. `status` receives 0 pass, 1 fail, 2 vacuous;
 * `report` (optional) the JSON report.
 *
 * # Safety
 * `id` must be a NUL-terminated string; `status` writable; `report` null or writable.
 */
enum KrStatus kr_verify_theorem(const char *id,
                                enum KrReading reading,
                                size_t search_max,
                                int32_t *status,
                                char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KRASNER_H */
