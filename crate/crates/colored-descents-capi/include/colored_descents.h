#ifndef COLORED_DESCENTS_H
#define COLORED_DESCENTS_H

/* Generated by cbindgen from colored-descents-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible call.
typedef enum CdStatus {
  // Success.
  CD_STATUS_OK = 0,
  // A required pointer argument was null.
  CD_STATUS_NULL_ARGUMENT = 1,
  // Malformed request: unknown statistic or method, colors out of
  // range, or a method that does not apply to the statistic.
  CD_STATUS_INVALID_ARGUMENT = 2,
  // The brute-force sweep would exceed `max_elements`.
  CD_STATUS_BUDGET_EXCEEDED = 3,
  // The requested route cannot produce a distribution (the known
  // erratum routes for same-color descents with r != 2).
  CD_STATUS_NOT_REPRESENTABLE = 4,
} CdStatus;

// Opaque handle to an exact distribution.
typedef struct CdDistribution CdDistribution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Compute the distribution of a statistic over one colored permutation
// group.
//
// `stat` is one of `"pdes"`, `"ndes"`, `"pndes"`, `"des-cd"`, `"des-cc"`;
// pass the colors through `c` and `d` (use a negative value for "unset").
// `method` is one of `"brute"`, `"formula"`, `"blocks"`, `"recurrence"`,
// `"series"`. `jobs = 0` means one worker; `max_elements = 0` selects the
// default enumeration cap. On success `*out` owns the result.
//
// # Safety
// `stat` and `method` must be valid NUL-terminated strings and `out` a
// valid pointer.
enum CdStatus cd_distribution_compute(uint32_t r,
                                      uint32_t n,
                                      const char *stat,
                                      int64_t c,
                                      int64_t d,
                                      const char *method,
                                      uint32_t jobs,
                                      uint64_t max_elements,
                                      struct CdDistribution **out);

// Free a distribution handle. Null is a no-op.
//
// # Safety
// `dist` must come from [`cd_distribution_compute`] and not be freed twice.
void cd_distribution_free(struct CdDistribution *dist);

// The full JSON form of a distribution; free with [`cd_string_free`].
// Returns null for a null handle.
//
// # Safety
// `dist` must be a live handle or null.
char *cd_distribution_json(const struct CdDistribution *dist);

// The count of elements attaining statistic value `m`, as a decimal
// string; free with [`cd_string_free`]. Returns null for a null handle.
//
// # Safety
// `dist` must be a live handle or null.
char *cd_distribution_count(const struct CdDistribution *dist, uint64_t m);

// Sum of all counts (the group order), as a decimal string; free with
// [`cd_string_free`]. Returns null for a null handle.
//
// # Safety
// `dist` must be a live handle or null.
char *cd_distribution_total(const struct CdDistribution *dist);

// Largest statistic value with a nonzero count, or -1 when the
// distribution is empty or the handle is null.
//
// # Safety
// `dist` must be a live handle or null.
int64_t cd_distribution_max_statistic(const struct CdDistribution *dist);

// Free a string returned by this library. Null is a no-op.
//
// # Safety
// `s` must come from this library and not be freed twice.
void cd_string_free(char *s);

// Exact check of the two-color binomial identity for all `n <= n_max`:
// returns 1 when it holds everywhere, 0 otherwise.
int32_t cd_identity_holds(uint64_t n_max);

// Order of the colored permutation group as a decimal string; free with
// [`cd_string_free`]. Returns null when `r == 0`.
char *cd_group_order(uint32_t r, uint32_t n);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COLORED_DESCENTS_H */
