// Copyright 2026 The Coxtour Authors.
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

/* C interface to libcoxtour.
 *
 * Objects are opaque handles released with the matching *_free call. Every
 * function returns a coxtour_status; on failure coxtour_last_error() gives a
 * message for the calling thread. Strings returned through `char**` are
 * owned by the caller and released with coxtour_string_free.
 *
 * Players are numbered from 1. Scores travel as text ("(-2/5, 1/2)", "-5.2",
 * ...) and are parsed as exact rationals; JSON outputs hold rationals as
 * strings such as "-26/5".
 *
 * Edge polarity: "neg" edges are competitive games (root e_i - e_j) and
 * "pos" edges cooperative games (root e_i + e_j).
 */
#ifndef COXTOUR_COXTOUR_H_
#define COXTOUR_COXTOUR_H_

#include <stddef.h>

#if defined(_WIN32)
#define COXTOUR_API __declspec(dllexport)
#else
#define COXTOUR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum coxtour_status {
  COXTOUR_OK = 0,
  COXTOUR_INVALID_ARGUMENT,
  COXTOUR_PARSE_ERROR,
  COXTOUR_UNSUPPORTED_TYPE,
  COXTOUR_NOT_FOUND,
  COXTOUR_INFEASIBLE,
  COXTOUR_PRECONDITION,
  COXTOUR_BUDGET_EXCEEDED,
  COXTOUR_NO_CONVERGENCE,
  COXTOUR_INTERNAL_ERROR,
} coxtour_status;

typedef enum coxtour_method {
  COXTOUR_METHOD_HH = 0,
  COXTOUR_METHOD_BIRKHOFF,
  COXTOUR_METHOD_STRASSEN,
} coxtour_method;

typedef struct coxtour_graph coxtour_graph;
typedef struct coxtour_tournament coxtour_tournament;

COXTOUR_API const char* coxtour_version(void);
COXTOUR_API const char* coxtour_last_error(void);
COXTOUR_API const char* coxtour_status_name(coxtour_status status);
COXTOUR_API void coxtour_string_free(char* s);

/* Graphs. `kind` is one of 'A', 'B', 'C', 'D'. */
COXTOUR_API coxtour_status coxtour_graph_from_json(const char* json,
                                                   coxtour_graph** out);
COXTOUR_API coxtour_status coxtour_graph_complete(char kind, int n,
                                                  coxtour_graph** out);
COXTOUR_API void coxtour_graph_free(coxtour_graph* g);
COXTOUR_API coxtour_status coxtour_graph_to_json(const coxtour_graph* g, char** out);
COXTOUR_API coxtour_status coxtour_graph_is_balanced(const coxtour_graph* g,
                                                     int drop_half_edges,
                                                     int* balanced);
/* {"root_type", "edges", "rho_G", and for B/C/D also "delta", "rho"}. */
COXTOUR_API coxtour_status coxtour_graph_info(const coxtour_graph* g, char** out_json);
/* h at a signed subset given as 1-based signed indices, e.g. "1, -3". */
COXTOUR_API coxtour_status coxtour_graph_h_value(const coxtour_graph* g,
                                                 const char* subset, char** out);

/* Membership of a mean score sequence. `member` is set to 0 or 1. When the
 * answer is 0, `reason` (if non-null) receives a short explanation. */
COXTOUR_API coxtour_status coxtour_is_mean_score(const coxtour_graph* g,
                                                 const char* scores, int* member,
                                                 char** reason);
COXTOUR_API coxtour_status coxtour_is_mean_score_complete(char kind, int n,
                                                          const char* scores,
                                                          int* member, char** reason);

/* Tournaments on the complete graph realizing the scores. */
COXTOUR_API coxtour_status coxtour_construct(char kind, int n, const char* scores,
                                             coxtour_method method,
                                             coxtour_tournament** out);
/* Havel-Hakimi step table as plain text. */
COXTOUR_API coxtour_status coxtour_hh_trace(char kind, int n, const char* scores,
                                            char** out_text);
/* Signed permutation terms, one "[2, -1] @ 1/4" per line. */
COXTOUR_API coxtour_status coxtour_birkhoff_terms(char kind, int n,
                                                  const char* scores,
                                                  char** out_text);

COXTOUR_API coxtour_status coxtour_tournament_from_json(const char* json,
                                                        coxtour_tournament** out);
COXTOUR_API void coxtour_tournament_free(coxtour_tournament* t);
COXTOUR_API coxtour_status coxtour_tournament_to_json(const coxtour_tournament* t,
                                                      char** out);
COXTOUR_API coxtour_status coxtour_tournament_mean_score(const coxtour_tournament* t,
                                                         char** out_json);

/* Deterministic tournament whose shifted score equals target[0..n). */
COXTOUR_API coxtour_status coxtour_realize_integer(const coxtour_graph* g,
                                                   const int* target, size_t n,
                                                   coxtour_tournament** out);
/* Exhaustive search; COXTOUR_NOT_FOUND if no deterministic tournament fits. */
COXTOUR_API coxtour_status coxtour_search_integer(const coxtour_graph* g,
                                                  const int* target, size_t n,
                                                  int max_edges,
                                                  coxtour_tournament** out);
/* Whether target[0..n) lies in the shifted zonotope. */
COXTOUR_API coxtour_status coxtour_is_lattice_point(const coxtour_graph* g,
                                                    const int* target, size_t n,
                                                    int* inside);
/* JSON array of integer points only reachable by random tournaments. */
COXTOUR_API coxtour_status coxtour_random_only_points(const coxtour_graph* g,
                                                      char** out_json);

/* Bradley-Terry strengths. lambda and x hold n doubles. */
COXTOUR_API coxtour_status coxtour_bt_forward(char kind, int n, const double* lambda,
                                              double* x);
COXTOUR_API coxtour_status coxtour_bt_fit(char kind, int n, const char* scores,
                                          double tol, int max_iterations,
                                          double* lambda, double* residual,
                                          int* iterations);

/* Brute-force oracle. max_edges <= 0 selects the default budget. */
COXTOUR_API coxtour_status coxtour_oracle_enumerate(const coxtour_graph* g,
                                                    int max_edges, char** out_json);
COXTOUR_API coxtour_status coxtour_oracle_member(const coxtour_graph* g,
                                                 const char* scores, int max_edges,
                                                 int* member);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // COXTOUR_COXTOUR_H_
