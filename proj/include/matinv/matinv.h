// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATINV_MATINV_H_
#define MATINV_MATINV_H_

#include <stddef.h>
#include <stdint.h>

#if defined(MATINV_BUILDING_LIBRARY)
#define MI_API __attribute__((visibility("default")))
#else
#define MI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Zero is success; everything else names the failure. */
typedef enum mi_status {
  MI_OK = 0,
  MI_ERR_INVALID_INPUT = 1,
  MI_ERR_PARSE = 2,
  MI_ERR_EMPTY_BASES = 3,
  MI_ERR_EXCHANGE_AXIOM_VIOLATION = 4,
  MI_ERR_ZERO_MATRIX = 5,
  MI_ERR_COLOOP_DELETION = 6,
  MI_ERR_LOOP_CONTRACTION = 7,
  MI_ERR_DEGENERATE_TERMINAL = 8,
  MI_ERR_LOOP_PARALLEL = 9,
  MI_ERR_COLOOP_SERIES = 10,
  MI_ERR_HAS_LOOPS = 11,
  MI_ERR_HAS_COLOOPS = 12,
  MI_ERR_GROUND_SET_TOO_LARGE = 13,
  MI_ERR_NOT_CONNECTED = 14,
  MI_ERR_VOLUME_CERTIFICATE_FAILURE = 15,
  MI_ERR_NOT_MATROIDAL = 16,
  MI_ERR_DIM_COMPONENT_MISMATCH = 17,
  MI_ERR_GROUND_SET_TOO_SMALL = 18,
  MI_ERR_PRECONDITION_VIOLATED = 19,
  MI_ERR_FLAT_COUNT_MISMATCH = 20,
  MI_ERR_COORDINATE_SUBGRASSMANNIAN = 21,
  MI_ERR_NOT_COMPUTABLE = 22,
  MI_ERR_TOO_MANY_UNKNOWNS = 23,
  MI_ERR_INCONSISTENT_SUM = 24,
  MI_ERR_NOT_A_BASIS = 25,
  MI_ERR_NOT_POINTED = 26,
  MI_ERR_NOT_LAURENT = 27,
  MI_ERR_INTERNAL = 28
} mi_status;

/* Opaque handles. */
typedef struct mi_matroid mi_matroid;
typedef struct mi_lift mi_lift;
typedef struct mi_subdivision mi_subdivision;

/* Message of the last failure on the calling thread ("" if none). */
MI_API const char* mi_last_error(void);
/* Stable identifier such as "ExchangeAxiomViolation". */
MI_API const char* mi_status_name(mi_status status);
/* Every char* handed out by this library is released with this. */
MI_API void mi_string_free(char* s);

/* Matroids. Element arguments are 1-indexed, as in the JSON formats. */
MI_API mi_status mi_matroid_from_json(const char* json, mi_matroid** out);
/* Bases as bitmasks, bit 0 = element 1. */
MI_API mi_status mi_matroid_from_bases(int n, int rank, const uint32_t* bases, size_t count,
                                       mi_matroid** out);
MI_API mi_status mi_matroid_uniform(int rank, int n, mi_matroid** out);
MI_API mi_status mi_matroid_wheel(int d, mi_matroid** out);
MI_API mi_status mi_matroid_whirl(int d, mi_matroid** out);
MI_API void mi_matroid_free(mi_matroid* m);

MI_API int mi_matroid_n(const mi_matroid* m);
MI_API int mi_matroid_rank(const mi_matroid* m);
MI_API size_t mi_matroid_num_bases(const mi_matroid* m);
MI_API mi_status mi_matroid_to_json(const mi_matroid* m, char** out);
/* Structural summary: loops, coloops, components, connectivity. */
MI_API mi_status mi_matroid_info_json(const mi_matroid* m, char** out);
/* Validates any matroid/matrix/graph JSON; reports an exchange-axiom
   witness instead of failing. */
MI_API mi_status mi_check_json(const char* json, char** out);

MI_API mi_status mi_matroid_dual(const mi_matroid* m, mi_matroid** out);
MI_API mi_status mi_matroid_delete(const mi_matroid* m, int e, mi_matroid** out);
MI_API mi_status mi_matroid_contract(const mi_matroid* m, int e, mi_matroid** out);
MI_API mi_status mi_matroid_direct_sum(const mi_matroid* a, const mi_matroid* b,
                                       mi_matroid** out);
MI_API mi_status mi_matroid_two_sum(const mi_matroid* a, int e1, const mi_matroid* b, int e2,
                                    mi_matroid** out);
MI_API mi_status mi_matroid_parallel_ext(const mi_matroid* m, int e, mi_matroid** out);
MI_API mi_status mi_matroid_series_ext(const mi_matroid* m, int e, mi_matroid** out);
MI_API mi_status mi_matroid_simplify(const mi_matroid* m, mi_matroid** out);
MI_API mi_status mi_matroid_cosimplify(const mi_matroid* m, mi_matroid** out);
MI_API mi_status mi_matroid_equal(const mi_matroid* a, const mi_matroid* b, int* out);
/* *out = 1 when isomorphic; `perm` (may be NULL) receives n 1-indexed images. */
MI_API mi_status mi_matroid_isomorphic(const mi_matroid* a, const mi_matroid* b, int* out,
                                       int* perm);

/* Invariants. */
MI_API mi_status mi_tutte_json(const mi_matroid* m, char** out);
MI_API mi_status mi_beta(const mi_matroid* m, int64_t* out);
MI_API mi_status mi_is_series_parallel(const mi_matroid* m, int* out);
/* {"g": {"t": [...]}, "derivation": "..."} */
MI_API mi_status mi_g_json(const mi_matroid* m, char** out);
MI_API mi_status mi_g_derivations_json(const mi_matroid* m, char** out);
MI_API mi_status mi_g_sanity_json(const mi_matroid* m, const char* poly_json, char** out);

/* Lifts and subdivisions. */
MI_API mi_status mi_lift_from_json(const char* json, mi_lift** out);
MI_API mi_status mi_lift_indicator(const mi_matroid* m, mi_lift** out);
MI_API void mi_lift_free(mi_lift* l);
MI_API mi_status mi_lift_to_json(const mi_lift* l, char** out);
MI_API mi_status mi_tplv_json(const mi_lift* l, char** out);
MI_API mi_status mi_subdivide(const mi_lift* l, int verify_volume, mi_subdivision** out);
MI_API void mi_subdivision_free(mi_subdivision* s);
MI_API mi_status mi_subdivision_json(const mi_subdivision* s, char** out);
MI_API mi_status mi_subdivision_fvector_json(const mi_subdivision* s, char** out);
MI_API mi_status mi_subdivision_bound_json(const mi_subdivision* s, char** out);
MI_API mi_status mi_subdivision_matroidal_json(const mi_subdivision* s, char** out);
/* target: interior face index (0-based), -1 for the whole polytope, -2 for
   the face with the most vertices. */
MI_API mi_status mi_subdivision_solve_g_json(const mi_subdivision* s, int target, char** out);

/* K-theory. */
MI_API mi_status mi_kclass_json(const mi_matroid* m, char** out);
MI_API mi_status mi_gkm_json(const char* class_json, char** out);
MI_API mi_status mi_valuative_json(const mi_subdivision* s, char** out);
MI_API mi_status mi_brion_json(const mi_matroid* m, char** out);

/* Golden corpus driver. */
MI_API mi_status mi_corpus_verify_json(const char* dir, uint64_t seed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MATINV_MATINV_H_ */
