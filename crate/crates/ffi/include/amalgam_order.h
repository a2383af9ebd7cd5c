#ifndef AMALGAM_ORDER_H
#define AMALGAM_ORDER_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum AoStatus {
  AO_STATUS_OK = 0,
  AO_STATUS_NULL_POINTER = 1,
  AO_STATUS_INVALID_UTF8 = 2,
  /**
   * A tower file or word did not parse.
   */
  AO_STATUS_PARSE_ERROR = 3,
  /**
   * An argument is outside the operation's domain, e.g. elements of
   * different groups, or an amalgam-only query on a cyclic group.
   */
  AO_STATUS_DOMAIN_ERROR = 4,
  /**
   * The group has no minimal positive element.
   */
  AO_STATUS_NOT_DISCRETE = 5,
  /**
   * The construction's hypotheses do not hold.
   */
  AO_STATUS_CONSTRUCTION_ERROR = 6,
  /**
   * An internal invariant broke; please report it.
   */
  AO_STATUS_ENGINE_ERROR = 7,
  AO_STATUS_NOT_FOUND = 8,
  AO_STATUS_PANIC = 9,
} AoStatus;

/**
 * An element, tied to the group it came from.
 */
typedef struct AoElement AoElement;

/**
 * A group from a tower.
 */
typedef struct AoGroup AoGroup;

/**
 * A parsed tower of group definitions.
 */
typedef struct AoTower AoTower;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null after a success.
 * The pointer stays valid until the next call on this thread.
 */
const char *ao_last_error(void);

/**
 * Parses and validates a tower definition.
 *
 * # Safety
 * `source` must be a nul-terminated string; `out` must be writable.
 */
enum AoStatus ao_tower_parse(const char *source, struct AoTower **out);

/**
 * # Safety
 * `tower` must come from [`ao_tower_parse`] and not be freed twice; null is ignored.
 */
void ao_tower_free(struct AoTower *tower);

/**
 * Looks up a group by name, or the last declared group when `name` is null.
 * The group stays valid after the tower is freed.
 *
 * # Safety
 * `tower` must be a live handle; `name` null or nul-terminated; `out` writable.
 */
enum AoStatus ao_tower_group(const struct AoTower *tower, const char *name, struct AoGroup **out);

/**
 * # Safety
 * `group` must come from [`ao_tower_group`] and not be freed twice; null is ignored.
 */
void ao_group_free(struct AoGroup *group);

/**
 * Parses a word such as `y^-2*x` into an element of `group`.
 *
 * # Safety
 * `group` must be a live handle; `word` nul-terminated; `out` writable.
 */
enum AoStatus ao_element_parse(const struct AoGroup *group,
                               const char *word,
                               struct AoElement **out);

/**
 * # Safety
 * `x` must come from this library and not be freed twice; null is ignored.
 */
void ao_element_free(struct AoElement *x);

/**
 * Renders the normal form of `x`. Free the result with [`ao_string_free`].
 *
 * # Safety
 * `x` must be a live handle; `out` writable.
 */
enum AoStatus ao_element_to_string(const struct AoElement *x, char **out);

/**
 * # Safety
 * `s` must come from [`ao_element_to_string`]; null is ignored.
 */
void ao_string_free(char *s);

/**
 * Writes -1, 0 or 1 as `a` is below, equal to or above `b`.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` writable.
 */
enum AoStatus ao_compare(const struct AoElement *a, const struct AoElement *b, int *out);

/**
 * Writes -1, 0 or 1 for the sign of `x`.
 *
 * # Safety
 * `x` must be a live handle; `out` writable.
 */
enum AoStatus ao_sign(const struct AoElement *x, int *out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` writable.
 */
enum AoStatus ao_mul(const struct AoElement *a, const struct AoElement *b, struct AoElement **out);

/**
 * # Safety
 * `x` must be a live handle; `out` writable.
 */
enum AoStatus ao_inv(const struct AoElement *x, struct AoElement **out);

/**
 * The least positive element of `group`.
 *
 * # Safety
 * `group` must be a live handle; `out` writable.
 */
enum AoStatus ao_min_positive(const struct AoGroup *group, struct AoElement **out);

/**
 * Filtration level of `x`, doubled so that half-levels are integers.
 * Only defined in an amalgam.
 *
 * # Safety
 * `x` must be a live handle; `out` writable.
 */
enum AoStatus ao_level_twice(const struct AoElement *x, int64_t *out);

/**
 * The largest element of the amalgamated subgroup not above `x`.
 *
 * # Safety
 * `x` must be a live handle; `out` writable.
 */
enum AoStatus ao_floor(const struct AoElement *x, struct AoElement **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* AMALGAM_ORDER_H */
