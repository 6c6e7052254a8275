#ifndef LATGROUP_H
#define LATGROUP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LgStatus {
  LG_STATUS_OK = 0,
  LG_STATUS_NULL_POINTER = 1,
  LG_STATUS_INVALID_UTF8 = 2,
  LG_STATUS_SYNTAX = 3,
  LG_STATUS_INDEX_OUT_OF_RANGE = 4,
  LG_STATUS_RANK_MISMATCH = 5,
  LG_STATUS_NOT_A_CYCLE = 6,
  LG_STATUS_INVALID_ARGUMENT = 7,
  LG_STATUS_OVERFLOW = 8,
  LG_STATUS_PANIC = 9,
} LgStatus;

typedef enum LgSubgroup {
  LG_SUBGROUP_N = 0,
  LG_SUBGROUP_M = 1,
  LG_SUBGROUP_COMMUTANT = 2,
} LgSubgroup;

// An element of the free 2-step nilpotent group.
typedef struct LgHeisElem LgHeisElem;

// An element of the free metabelian group: endpoint plus edge flow.
typedef struct LgMetElem LgMetElem;

// An element of a satellite group at a fixed level.
typedef struct LgSatElem LgSatElem;

// A freely reduced word in the free group of some rank.
typedef struct LgWord LgWord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or null if none. The pointer
// stays valid until the next failing call on the same thread.
const char *lg_last_error_message(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string returned by this library that has not been freed.
void lg_string_free(char *s);

// Parses `text` (tokens `x<i>` or `x<i>^<n>`) as a reduced word of the given rank.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum LgStatus lg_word_parse(const char *text, size_t rank, struct LgWord **out);

// # Safety
// `w` must be null or a live handle from this library.
void lg_word_free(struct LgWord *w);

// # Safety
// `w` must be a live handle; `out` must be writable.
enum LgStatus lg_word_len(const struct LgWord *w, size_t *out);

// # Safety
// `w` must be a live handle; `out` must be writable.
enum LgStatus lg_word_to_string(const struct LgWord *w, char **out);

// Reduced concatenation `a b`.
//
// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum LgStatus lg_word_concat(const struct LgWord *a, const struct LgWord *b, struct LgWord **out);

// # Safety
// `w` must be a live handle; `out` must be writable.
enum LgStatus lg_word_invert(const struct LgWord *w, struct LgWord **out);

// Endpoint and edge flow of the lattice path spelled by `w`, as JSON.
//
// # Safety
// `w` must be a live handle; `out` must be writable.
enum LgStatus lg_word_eval_json(const struct LgWord *w, char **out);

// Plaquette decomposition of the flow of a closed word, as JSON.
//
// # Safety
// `w` must be a live handle; `out` must be writable.
enum LgStatus lg_word_decompose_json(const struct LgWord *w, char **out);

// Abelianized Fox derivatives of `w`, as JSON.
//
// # Safety
// `w` must be a live handle; `out` must be writable.
enum LgStatus lg_word_fox_json(const struct LgWord *w, char **out);

// # Safety
// `w` must be a live handle; `out` must be writable.
enum LgStatus lg_met_from_word(const struct LgWord *w, struct LgMetElem **out);

// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum LgStatus lg_met_mul(const struct LgMetElem *a,
                         const struct LgMetElem *b,
                         struct LgMetElem **out);

// # Safety
// `a` must be a live handle; `out` must be writable.
enum LgStatus lg_met_inv(const struct LgMetElem *a, struct LgMetElem **out);

// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum LgStatus lg_met_eq(const struct LgMetElem *a, const struct LgMetElem *b, bool *out);

// # Safety
// `a` must be a live handle; `out` must be writable.
enum LgStatus lg_met_is_identity(const struct LgMetElem *a, bool *out);

// # Safety
// `a` must be a live handle; `out` must be writable.
enum LgStatus lg_met_to_json(const struct LgMetElem *a, char **out);

// # Safety
// `a` must be null or a live handle from this library.
void lg_met_free(struct LgMetElem *a);

// # Safety
// `w` must be a live handle; `out` must be writable.
enum LgStatus lg_heis_from_word(const struct LgWord *w, struct LgHeisElem **out);

// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum LgStatus lg_heis_mul(const struct LgHeisElem *a,
                          const struct LgHeisElem *b,
                          struct LgHeisElem **out);

// # Safety
// `a` must be a live handle; `out` must be writable.
enum LgStatus lg_heis_inv(const struct LgHeisElem *a, struct LgHeisElem **out);

// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum LgStatus lg_heis_eq(const struct LgHeisElem *a, const struct LgHeisElem *b, bool *out);

// Signed area `A_ij` for `1 <= i < j <= rank`, as a decimal string.
//
// # Safety
// `a` must be a live handle; `out` must be writable.
enum LgStatus lg_heis_area(const struct LgHeisElem *a, size_t i, size_t j, char **out);

// # Safety
// `a` must be a live handle; `out` must be writable.
enum LgStatus lg_heis_to_json(const struct LgHeisElem *a, char **out);

// # Safety
// `a` must be null or a live handle from this library.
void lg_heis_free(struct LgHeisElem *a);

// Parses a word over `x`, `y`, `z` (with optional exponents) at level `k`.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum LgStatus lg_sat_parse(const char *text, int64_t k, struct LgSatElem **out);

// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum LgStatus lg_sat_mul(const struct LgSatElem *a,
                         const struct LgSatElem *b,
                         struct LgSatElem **out);

// # Safety
// `a` must be a live handle; `out` must be writable.
enum LgStatus lg_sat_inv(const struct LgSatElem *a, struct LgSatElem **out);

// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum LgStatus lg_sat_eq(const struct LgSatElem *a, const struct LgSatElem *b, bool *out);

// # Safety
// `a` must be a live handle; `out` must be writable.
enum LgStatus lg_sat_is_member(const struct LgSatElem *a, enum LgSubgroup sub, bool *out);

// # Safety
// `a` must be a live handle; `out` must be writable.
enum LgStatus lg_sat_to_json(const struct LgSatElem *a, char **out);

// # Safety
// `a` must be null or a live handle from this library.
void lg_sat_free(struct LgSatElem *a);

// Canonical cocycle value for two comma-separated vectors such as `"1,-2"`, as JSON.
//
// # Safety
// `g1`, `g2` must be NUL-terminated strings; `out` must be writable.
enum LgStatus lg_cocycle_json(const char *g1, const char *g2, char **out);

// Invariant of `k` times the canonical rank-2 cocycle.
//
// # Safety
// `out` must be writable.
enum LgStatus lg_beta_scaled(int64_t k, int64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LATGROUP_H */
