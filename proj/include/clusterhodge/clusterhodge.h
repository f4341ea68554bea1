#ifndef CLUSTERHODGE_CLUSTERHODGE_H
#define CLUSTERHODGE_CLUSTERHODGE_H

/* C interface to the cluster-variety Hodge library.
 *
 * Seeds are opaque handles created from quiver JSON and released with
 * clh_seed_free. Functions returning text allocate it; release it with
 * clh_string_free. On failure the output pointer is left NULL (except where
 * noted) and clh_last_error() describes the problem for the calling thread.
 * Vertex indices are 1-based. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CLH_BUILDING_LIBRARY)
#    define CLH_API __declspec(dllexport)
#  else
#    define CLH_API __declspec(dllimport)
#  endif
#else
#  define CLH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct clh_seed clh_seed;

typedef enum clh_status {
  CLH_OK = 0,
  CLH_ERR_PARSE = 1,               /* malformed JSON or wrong shape */
  CLH_OPEN_CASE = 2,               /* case left open by the theory */
  CLH_ERR_INVALID_INDEX = 3,
  CLH_ERR_NOT_SKEW_SYMMETRIC = 4,
  CLH_ERR_UNSUPPORTED_DIMENSION = 5,
  CLH_ERR_NOT_FINITE_TYPE = 6,
  CLH_ERR_NOT_LOUISE = 7,
  CLH_ERR_PRECONDITION = 8,
  CLH_ERR_DOMAIN = 9,
  CLH_ERR_INTERPOLATION = 10,      /* too few samples, non-integral or held-out mismatch */
  CLH_ERR_OVERFLOW = 11,
  CLH_ERR_INCONSISTENT_RANK = 12,
  CLH_ERR_INVALID_ARGUMENT = 13,
  CLH_ERR_INTERNAL = 14
} clh_status;

typedef enum clh_format { CLH_FORMAT_TEXT = 0, CLH_FORMAT_JSON = 1, CLH_FORMAT_CSV = 2 } clh_format;

typedef enum clh_basis_variant { CLH_BASIS_STATEMENT = 0, CLH_BASIS_EQ21 = 1 } clh_basis_variant;

typedef enum clh_verdict { CLH_VERDICT_PASS = 0, CLH_VERDICT_FAIL = 1, CLH_VERDICT_COUNT_ONLY = 2 } clh_verdict;

CLH_API const char* clh_version(void);
/* Message of the last failure on this thread; empty string if none. */
CLH_API const char* clh_last_error(void);
CLH_API const char* clh_status_name(clh_status status);
CLH_API void clh_string_free(char* text);

CLH_API clh_status clh_seed_from_json(const char* json, clh_seed** out);
CLH_API void clh_seed_free(clh_seed* seed);
CLH_API clh_status clh_seed_to_json(const clh_seed* seed, char** out);
CLH_API clh_status clh_seed_shape(const clh_seed* seed, size_t* mutable_count, size_t* frozen_count);
CLH_API clh_status clh_seed_mutate(const clh_seed* seed, size_t k, clh_seed** out);
CLH_API clh_status clh_seed_freeze(const clh_seed* seed, const size_t* indices, size_t count, clh_seed** out);

/* Returns CLH_OPEN_CASE for Unsupported classifications; *out is written
 * in that case too. */
CLH_API clh_status clh_classify(const clh_seed* seed, clh_format format, char** out);

/* Mixed Hodge table; ih != 0 selects intersection cohomology. TEXT is the
 * ASCII layout with rows k-p and columns H^k. */
CLH_API clh_status clh_table(const clh_seed* seed, int ih, clh_format format, char** out);

CLH_API clh_status clh_basis(const clh_seed* seed, clh_basis_variant variant, clh_format format, char** out);

/* Number of F_p points of the cluster variety. */
CLH_API clh_status clh_count(const clh_seed* seed, uint64_t prime, uint64_t* count);

/* Point-count verification. With prime_count == 0 the primes are chosen
 * automatically; otherwise the last listed prime is held out. */
CLH_API clh_status clh_verify(const clh_seed* seed, const uint64_t* primes, size_t prime_count, clh_format format,
                              char** out, clh_verdict* verdict);

/* Needs 3 mutable and 0 frozen vertices. */
CLH_API clh_status clh_finite_type(const clh_seed* seed, clh_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
