#ifndef GALOISDR_H
#define GALOISDR_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GDR_API __declspec(dllexport)
#else
#define GDR_API __attribute__((visibility("default")))
#endif

/* Status codes. Anything but GDR_OK leaves a message in gdr_last_error(). */
typedef enum gdr_status {
  GDR_OK = 0,
  GDR_INVALID_ARGUMENT,
  GDR_PARSE_ERROR,
  GDR_DEGREE_CAP_EXCEEDED,
  GDR_NOT_AN_EMBEDDING,
  GDR_NO_EMBEDDING,
  GDR_RAMIFIED_OR_BAD_PRIME,
  GDR_RAMIFIED_INFINITE_PLACE,
  GDR_INCONSISTENT_DESCENT,
  GDR_AMBIENT_MISMATCH,
  GDR_CORRUPT_CACHE,
  GDR_IO_ERROR,
  GDR_INTERNAL
} gdr_status;

/* A Galois closure of a set of rational polynomials. */
typedef struct gdr_ambient gdr_ambient;
/* The coordinate ring A(L/K) for a Galois subextension of an ambient. */
typedef struct gdr_ring gdr_ring;

GDR_API const char* gdr_version(void);
/* Name such as "RamifiedOrBadPrime"; "Ok" for GDR_OK. */
GDR_API const char* gdr_status_name(gdr_status status);

/* Per-thread diagnostics from the most recent call. */
GDR_API const char* gdr_last_error(void);
GDR_API size_t gdr_warning_count(void);
GDR_API const char* gdr_warning(size_t index);

/* Strings returned through char** out-parameters are owned by the caller. */
GDR_API void gdr_string_free(char* s);

/* Parses a polynomial in x and returns its canonical text. */
GDR_API gdr_status gdr_parse_polynomial(const char* text, char** out_canonical);

/* Splitting field of `polys`. `cache_dir` may be NULL. A corrupt cache
   entry is recomputed and reported through gdr_warning(). */
GDR_API gdr_status gdr_ambient_new(const char* const* polys, size_t count, int max_degree,
                                   const char* cache_dir, gdr_ambient** out);
GDR_API void gdr_ambient_free(gdr_ambient* ambient);
GDR_API int gdr_ambient_degree(const gdr_ambient* ambient);
GDR_API int gdr_ambient_cache_hit(const gdr_ambient* ambient);

/* L is the splitting field of `field` inside the ambient (NULL: the whole
   ambient); K = Q(r) for the least root r of `over` (NULL: Q). */
GDR_API gdr_status gdr_ring_new(const gdr_ambient* ambient, const char* field, const char* over,
                                gdr_ring** out);
GDR_API void gdr_ring_free(gdr_ring* ring);
GDR_API int gdr_ring_dim(const gdr_ring* ring);

/* JSON reports, compact and with sorted keys. */
GDR_API gdr_status gdr_split_report(const gdr_ambient* ambient, char** out_json);
GDR_API gdr_status gdr_group_report(const gdr_ambient* ambient, char** out_json);
GDR_API gdr_status gdr_coordinate_ring_report(const gdr_ring* ring, char** out_json);
GDR_API gdr_status gdr_points_report(const gdr_ring* ring, char** out_json);
GDR_API gdr_status gdr_dr_report(const gdr_ring* ring, int tower, int max_degree, char** out_json);
/* Restriction maps induced by every embedding of the ring's top field into
   the target ambient. */
GDR_API gdr_status gdr_restrict_report(const gdr_ring* source, const gdr_ambient* target, char** out_json);
GDR_API gdr_status gdr_frobenius_report(const gdr_ring* ring, uint64_t p, char** out_json);
GDR_API gdr_status gdr_frobenius_sweep_report(const gdr_ring* ring, uint64_t lo, uint64_t hi, char** out_json);
GDR_API gdr_status gdr_frobenius_infinity_report(const gdr_ring* ring, char** out_json);
/* Permutation motive of Spec Q[x]/(scheme), which must split in the ambient. */
GDR_API gdr_status gdr_motive_report(const gdr_ambient* ambient, const char* scheme, char** out_json);

/* Runs a check suite ("all", "acceptance", "invariants"). The report and
   per-check timings are returned separately; `passed` is 1 when no blocking
   check failed. */
GDR_API gdr_status gdr_check_report(const char* suite, char** out_json, char** out_timing_json, int* passed);

#ifdef __cplusplus
}
#endif

#endif
