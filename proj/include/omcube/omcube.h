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


/* C interface to the omcube library.
 *
 * Objects are opaque handles released with the matching _free function.
 * Every function returns an omcube_status; on failure the message is
 * available from omcube_last_error() (per thread) until the next call.
 * Strings returned through char** are allocated by the library and released
 * with omcube_string_free. JSON follows the formats of the omcube CLI.
 */

#ifndef OMCUBE_OMCUBE_H_
#define OMCUBE_OMCUBE_H_

#include <stddef.h>

#if defined(_WIN32)
#define OMCUBE_API __declspec(dllexport)
#else
#define OMCUBE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum omcube_status {
  OMCUBE_OK = 0,
  OMCUBE_INVALID_ARGUMENT = 1,
  OMCUBE_PARSE = 2,
  OMCUBE_PRECONDITION = 3,
  OMCUBE_INVARIANT = 4,
  OMCUBE_SCALE_GUARD = 5,
  OMCUBE_INTERNAL = 6
} omcube_status;

typedef struct omcube_om omcube_om;
typedef struct omcube_config omcube_config;

OMCUBE_API const char* omcube_version(void);
OMCUBE_API const char* omcube_last_error(void);
OMCUBE_API const char* omcube_status_name(omcube_status status);
OMCUBE_API void omcube_string_free(char* s);

/* Oriented matroids. */
OMCUBE_API void omcube_om_free(omcube_om* om);
OMCUBE_API omcube_status omcube_om_clone(const omcube_om* om, omcube_om** out);
/* `notes` (optional) receives a JSON array of normalizations applied. */
OMCUBE_API omcube_status omcube_om_from_json(const char* json, omcube_om** out, char** notes);
OMCUBE_API omcube_status omcube_om_to_json(const omcube_om* om, char** out);
OMCUBE_API omcube_status omcube_om_size(const omcube_om* om, size_t* out);
OMCUBE_API omcube_status omcube_om_rank(const omcube_om* om, size_t* out);
OMCUBE_API omcube_status omcube_om_circuit_count(const omcube_om* om, size_t* out);
OMCUBE_API omcube_status omcube_om_cocircuit_count(const omcube_om* om, size_t* out);
OMCUBE_API omcube_status omcube_om_hyperplane_count(const omcube_om* om, size_t* out);
OMCUBE_API omcube_status omcube_om_equal(const omcube_om* a, const omcube_om* b, int* out);
/* `out` receives {"found": bool, "isomorphism": {...} | null}. */
OMCUBE_API omcube_status omcube_isomorphism(const omcube_om* a, const omcube_om* b, int reorient,
                                            int* found, char** out);
/* Circuit axioms and orthogonality: {"valid": bool, "violations": [...]}. */
OMCUBE_API omcube_status omcube_validate(const omcube_om* om, int* ok, char** out);

/* Generators. */
OMCUBE_API omcube_status omcube_gen_cross_polytope(size_t n, omcube_om** out);
OMCUBE_API omcube_status omcube_gen_real_cube(size_t n, omcube_om** out);
OMCUBE_API omcube_status omcube_gen_canonical_adjoint(size_t n, omcube_om** out);
OMCUBE_API omcube_status omcube_gen_cross_polytope_plus_zero(size_t n, omcube_om** out);

/* Checks; `report` is optional. */
OMCUBE_API omcube_status omcube_check_cube(const omcube_om* om, int* ok, char** report);
OMCUBE_API omcube_status omcube_check_adjoint(const omcube_om* om, size_t n, int strong, int* ok,
                                              char** report);
OMCUBE_API omcube_status omcube_check_localization(const omcube_om* base, const char* localization,
                                                   int* ok, char** report);

/* Extensions and the cube/adjoint correspondence. */
OMCUBE_API omcube_status omcube_extend(const omcube_om* base, const char* localization,
                                       const char* label, omcube_om** out);
OMCUBE_API omcube_status omcube_infinity_localization(const omcube_om* cube, size_t axis,
                                                      char** out);
OMCUBE_API omcube_status omcube_cube_to_adjoint(const omcube_om* cube, omcube_om** out);
OMCUBE_API omcube_status omcube_adjoint_to_cube(const omcube_om* adjoint, omcube_om** out);
OMCUBE_API omcube_status omcube_reorient_facet(const omcube_om* cube, size_t axis, omcube_om** out);

/* Point configurations. */
OMCUBE_API void omcube_config_free(omcube_config* config);
OMCUBE_API omcube_status omcube_config_from_json(const char* json, omcube_config** out,
                                                 char** notes);
OMCUBE_API omcube_status omcube_config_to_json(const omcube_config* config, char** out);
/* `report` (optional): chirotope size, dependence witnesses, parallel pairs. */
OMCUBE_API omcube_status omcube_realize(const omcube_config* config, omcube_om** out,
                                        char** report);
OMCUBE_API omcube_status omcube_transform(const omcube_config* config, const char* matrix,
                                          omcube_config** out);
/* Center of a realized cube, with facet centers and polar for n >= 3. */
OMCUBE_API omcube_status omcube_center(const omcube_config* config, char** out);
OMCUBE_API omcube_status omcube_meet(const omcube_config* config, size_t axis, char** out);
OMCUBE_API omcube_status omcube_adjoint_realization(const omcube_config* config,
                                                    omcube_config** out);

/* Verification suite. `only` is an optional comma-separated list of ids. */
typedef struct omcube_verify_options {
  size_t n;
  unsigned long long seed;
  size_t transforms;
  double search_budget;
  const char* only;
} omcube_verify_options;
OMCUBE_API omcube_verify_options omcube_verify_default_options(void);
OMCUBE_API omcube_status omcube_verify(const omcube_verify_options* options, int* ok, char** report);
/* JSON array of {"id", "description", "max_n"}. */
OMCUBE_API omcube_status omcube_verify_claims(char** out);

/* Search. kind: "cubes", "adjoints", "orientations"; strategy: "exhaustive",
 * "pruned". `complete` is 1 when the run was proved exhaustive. */
typedef struct omcube_search_options {
  size_t n;
  const char* kind;
  const char* strategy;
  double budget_seconds;
  const char* checkpoint_path;
  double checkpoint_interval;
  unsigned threads;
} omcube_search_options;
OMCUBE_API omcube_search_options omcube_search_default_options(void);
OMCUBE_API omcube_status omcube_search(const omcube_search_options* options, int* complete,
                                       char** report);

#ifdef __cplusplus
}
#endif

#endif /* OMCUBE_OMCUBE_H_ */
