#ifndef MCGKIT_H
#define MCGKIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call. Values other than `Ok` mirror the error
 * kinds of the core library plus failures of the boundary itself.
 */
typedef enum McgStatus {
  MCG_STATUS_OK = 0,
  MCG_STATUS_INVALID_SURFACE = 1,
  MCG_STATUS_INVALID_CURVE = 2,
  MCG_STATUS_HOST_MISMATCH = 3,
  MCG_STATUS_NOT_EMBEDDED = 4,
  MCG_STATUS_HYPOTHESIS = 5,
  MCG_STATUS_PRECONDITION = 6,
  MCG_STATUS_UNKNOWN_CURVE = 7,
  MCG_STATUS_PARSE = 8,
  MCG_STATUS_NOT_FOUND = 9,
  MCG_STATUS_NULL_POINTER = 10,
  MCG_STATUS_INVALID_UTF8 = 11,
  MCG_STATUS_PANIC = 12,
} McgStatus;

/**
 * Opaque curve handle; keeps its surface alive.
 */
typedef struct McgCurve McgCurve;

/**
 * Opaque surface handle.
 */
typedef struct McgSurface McgSurface;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on this thread.
 */
const char *mcg_last_error(void);

/**
 * Library version, a static string.
 */
const char *mcg_version(void);

/**
 * Canonical model of the surface of genus `genus` with `boundary`
 * boundary circles and `punctures` punctures.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum McgStatus mcg_surface_canonical(size_t genus,
                                     size_t boundary,
                                     size_t punctures,
                                     struct McgSurface **out);

/**
 * Surface from `{"faces", "gluing", "punctures"}` or `"canonical:g,q,m"`.
 *
 * # Safety
 * `json_text` must be a NUL-terminated string and `out` valid for writes.
 */
enum McgStatus mcg_surface_from_json(const char *json_text, struct McgSurface **out);

/**
 * # Safety
 * `s` must be a live handle and `out` valid for writes.
 */
enum McgStatus mcg_surface_to_json(const struct McgSurface *s, char **out);

/**
 * Writes genus, boundary count and puncture count.
 *
 * # Safety
 * `s` must be a live handle and `out` valid for three writes.
 */
enum McgStatus mcg_surface_spec(const struct McgSurface *s, size_t *out);

/**
 * # Safety
 * `s` must be null or a handle not yet freed.
 */
void mcg_surface_free(struct McgSurface *s);

/**
 * Curve from `{"surface": .., "word": [{"edge", "pos", "dir"}, ..]}`.
 * When `host` is not null the `surface` field may be omitted.
 *
 * # Safety
 * `json_text` must be a NUL-terminated string, `host` null or live, and `out`
 * valid for writes.
 */
enum McgStatus mcg_curve_from_json(const char *json_text,
                                   const struct McgSurface *host,
                                   struct McgCurve **out);

/**
 * # Safety
 * `c` must be a live handle and `out` valid for writes.
 */
enum McgStatus mcg_curve_to_json(const struct McgCurve *c, char **out);

/**
 * # Safety
 * `c` must be null or a handle not yet freed.
 */
void mcg_curve_free(struct McgCurve *c);

/**
 * Geometric intersection number.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` valid for writes.
 */
enum McgStatus mcg_intersection_number(const struct McgCurve *a,
                                       const struct McgCurve *b,
                                       size_t *out);

/**
 * Whether `a` and `b` are isotopic, respecting orientation when `oriented`.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` valid for writes.
 */
enum McgStatus mcg_is_isotopic(const struct McgCurve *a,
                               const struct McgCurve *b,
                               bool oriented,
                               bool *out);

/**
 * Image of `c` under the `n`-th power of the twist along `along`.
 *
 * # Safety
 * `c`, `along` must be live handles and `out` valid for writes.
 */
enum McgStatus mcg_dehn_twist(const struct McgCurve *c,
                              const struct McgCurve *along,
                              int64_t n,
                              struct McgCurve **out);

/**
 * Centre of the mapping class group as tagged JSON.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum McgStatus mcg_centre_json(size_t genus, size_t boundary, size_t punctures, char **out);

/**
 * Classification report of a subsurface config, optionally against a
 * second config (`other` may be null).
 *
 * # Safety
 * `config` must be a NUL-terminated string, `other` null or one, and
 * `out` valid for writes.
 */
enum McgStatus mcg_classify_json(const char *config, const char *other, char **out);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void mcg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MCGKIT_H */
