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

#include "coxtour/coxtour.h"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <cstring>
#include <new>
#include <string>

#include "coxtour/birkhoff.h"
#include "coxtour/btfit.h"
#include "coxtour/error.h"
#include "coxtour/hh.h"
#include "coxtour/io.h"
#include "coxtour/landau.h"
#include "coxtour/majorize.h"
#include "coxtour/oracle.h"

struct coxtour_graph {
  coxtour::SignedGraph value;
};

struct coxtour_tournament {
  coxtour::Tournament value;
};

namespace {

using namespace coxtour;

thread_local std::string last_error;

coxtour_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return COXTOUR_INVALID_ARGUMENT;
    case ErrorCode::kParse: return COXTOUR_PARSE_ERROR;
    case ErrorCode::kUnsupportedType: return COXTOUR_UNSUPPORTED_TYPE;
    case ErrorCode::kNotFound: return COXTOUR_NOT_FOUND;
    case ErrorCode::kInfeasible: return COXTOUR_INFEASIBLE;
    case ErrorCode::kPrecondition: return COXTOUR_PRECONDITION;
    case ErrorCode::kBudget: return COXTOUR_BUDGET_EXCEEDED;
    case ErrorCode::kNoConvergence: return COXTOUR_NO_CONVERGENCE;
    case ErrorCode::kInternal: return COXTOUR_INTERNAL_ERROR;
  }
  return COXTOUR_INTERNAL_ERROR;
}

template <class F>
coxtour_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return COXTOUR_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return COXTOUR_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return COXTOUR_INTERNAL_ERROR;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) fail(ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

RootType root_type(char kind, int n) {
  return RootType::make(parse_root_kind(std::string(1, kind)), n);
}

std::vector<int> target_vector(const int* target, std::size_t n) {
  if (n > 0) require(target, "target");
  return std::vector<int>(target, target + n);
}

OracleBudget budget_for(int max_edges) {
  OracleBudget b;
  if (max_edges > 0) b.max_edges = max_edges;
  return b;
}

}  // namespace

extern "C" {

const char* coxtour_version(void) { return "1.0.0"; }

const char* coxtour_last_error(void) { return last_error.c_str(); }

const char* coxtour_status_name(coxtour_status status) {
  switch (status) {
    case COXTOUR_OK: return "ok";
    case COXTOUR_INVALID_ARGUMENT: return "invalid argument";
    case COXTOUR_PARSE_ERROR: return "parse error";
    case COXTOUR_UNSUPPORTED_TYPE: return "unsupported root type";
    case COXTOUR_NOT_FOUND: return "not found";
    case COXTOUR_INFEASIBLE: return "infeasible";
    case COXTOUR_PRECONDITION: return "precondition failed";
    case COXTOUR_BUDGET_EXCEEDED: return "budget exceeded";
    case COXTOUR_NO_CONVERGENCE: return "no convergence";
    case COXTOUR_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

void coxtour_string_free(char* s) { std::free(s); }

coxtour_status coxtour_graph_from_json(const char* json, coxtour_graph** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new coxtour_graph{graph_from_json(parse_json(json))};
  });
}

coxtour_status coxtour_graph_complete(char kind, int n, coxtour_graph** out) {
  return guarded([&] {
    require(out, "out");
    *out = new coxtour_graph{complete_graph(root_type(kind, n))};
  });
}

void coxtour_graph_free(coxtour_graph* g) { delete g; }

coxtour_status coxtour_graph_to_json(const coxtour_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = duplicate(graph_to_json(g->value).dump());
  });
}

coxtour_status coxtour_graph_is_balanced(const coxtour_graph* g, int drop_half_edges,
                                         int* balanced) {
  return guarded([&] {
    require(g, "graph");
    require(balanced, "balanced");
    *balanced = is_balanced(g->value, drop_half_edges != 0) ? 1 : 0;
  });
}

coxtour_status coxtour_graph_info(const coxtour_graph* g, char** out_json) {
  return guarded([&] {
    require(g, "graph");
    require(out_json, "out_json");
    const RootType& t = g->value.root_type();
    Json j;
    j["root_type"] = root_type_to_json(t);
    j["edges"] = g->value.edge_count();
    j["rho_G"] = rationals_to_json(translation_vector(g->value));
    if (t.kind != RootKind::A) {
      j["delta"] = format_rational(delta_of(t));
      j["rho"] = rationals_to_json(rho_complete(t));
    }
    *out_json = duplicate(j.dump());
  });
}

coxtour_status coxtour_graph_h_value(const coxtour_graph* g, const char* subset,
                                     char** out) {
  return guarded([&] {
    require(g, "graph");
    require(subset, "subset");
    require(out, "out");
    AdmissibleSubset s;
    for (const Rational& q : parse_rational_list(subset)) {
      if (q.get_den() != 1 || q == 0 || !q.get_num().fits_sint_p())
        fail(ErrorCode::kParse, "subset entries are nonzero signed indices");
      long v = q.get_num().get_si();
      (v > 0 ? s.plus : s.minus).push_back(static_cast<int>(std::labs(v)) - 1);
    }
    *out = duplicate(format_rational(h_value(g->value, s)));
  });
}

coxtour_status coxtour_is_mean_score(const coxtour_graph* g, const char* scores,
                                     int* member, char** reason) {
  return guarded([&] {
    require(g, "graph");
    require(scores, "scores");
    require(member, "member");
    RationalVector x = parse_rational_list(scores);
    if (static_cast<int>(x.size()) != g->value.n())
      fail(ErrorCode::kInvalidArgument, "expected " + std::to_string(g->value.n()) +
                                            " scores, got " + std::to_string(x.size()));
    auto bad = violated_subset(g->value, x);
    *member = bad ? 0 : 1;
    if (reason != nullptr) {
      *reason = nullptr;
      if (bad) {
        Rational lhs = 0;
        std::string name;
        for (int i : bad->plus) {
          lhs += x[i];
          name += (name.empty() ? "" : ", ") + std::to_string(i + 1);
        }
        for (int i : bad->minus) {
          lhs -= x[i];
          name += (name.empty() ? "-" : ", -") + std::to_string(i + 1);
        }
        *reason = duplicate("signed subset {" + name + "}: " + format_decimal(lhs) +
                            " > h = " + format_decimal(h_value(g->value, *bad)));
      }
    }
  });
}

coxtour_status coxtour_is_mean_score_complete(char kind, int n, const char* scores,
                                              int* member, char** reason) {
  return guarded([&] {
    require(scores, "scores");
    require(member, "member");
    RootType t = root_type(kind, n);
    RationalVector x = parse_rational_list(scores);
    if (static_cast<int>(x.size()) != n)
      fail(ErrorCode::kInvalidArgument, "expected " + std::to_string(n) +
                                            " scores, got " + std::to_string(x.size()));
    *member = is_mean_score_complete(t, x) ? 1 : 0;
    if (reason != nullptr) {
      *reason = nullptr;
      if (!*member) {
        RationalVector ax = abs(x), rho = rho_complete(t);
        int k = *first_weak_violation(ax, rho);
        std::sort(ax.begin(), ax.end(), std::greater<>());
        Rational lhs = 0, rhs = 0;
        for (int i = 0; i < k; ++i) {
          lhs += ax[i];
          rhs += rho[n - 1 - i];
        }
        *reason = duplicate("the " + std::to_string(k) + " largest |x_i| sum to " +
                            format_decimal(lhs) + " > " + format_decimal(rhs));
      }
    }
  });
}

coxtour_status coxtour_construct(char kind, int n, const char* scores,
                                 coxtour_method method, coxtour_tournament** out) {
  return guarded([&] {
    require(scores, "scores");
    require(out, "out");
    RootType t = root_type(kind, n);
    RationalVector x = parse_rational_list(scores);
    switch (method) {
      case COXTOUR_METHOD_HH: *out = new coxtour_tournament{hh_construct(t, x)}; break;
      case COXTOUR_METHOD_BIRKHOFF:
        *out = new coxtour_tournament{mixture_tournament(birkhoff_decompose(x, t), t)};
        break;
      case COXTOUR_METHOD_STRASSEN:
        *out = new coxtour_tournament{strassen_construct(x, t)};
        break;
      default: fail(ErrorCode::kInvalidArgument, "unknown construction method");
    }
  });
}

coxtour_status coxtour_hh_trace(char kind, int n, const char* scores, char** out_text) {
  return guarded([&] {
    require(scores, "scores");
    require(out_text, "out_text");
    RootType t = root_type(kind, n);
    *out_text = duplicate(
        format_hh_trace(t, hh_construct_traced(t, parse_rational_list(scores)).trace));
  });
}

coxtour_status coxtour_birkhoff_terms(char kind, int n, const char* scores,
                                      char** out_text) {
  return guarded([&] {
    require(scores, "scores");
    require(out_text, "out_text");
    RootType t = root_type(kind, n);
    *out_text = duplicate(
        format_decomposition(birkhoff_decompose(parse_rational_list(scores), t)));
  });
}

coxtour_status coxtour_tournament_from_json(const char* json, coxtour_tournament** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new coxtour_tournament{tournament_from_json(parse_json(json))};
  });
}

void coxtour_tournament_free(coxtour_tournament* t) { delete t; }

coxtour_status coxtour_tournament_to_json(const coxtour_tournament* t, char** out) {
  return guarded([&] {
    require(t, "tournament");
    require(out, "out");
    *out = duplicate(tournament_to_json(t->value).dump());
  });
}

coxtour_status coxtour_tournament_mean_score(const coxtour_tournament* t,
                                             char** out_json) {
  return guarded([&] {
    require(t, "tournament");
    require(out_json, "out_json");
    *out_json = duplicate(rationals_to_json(mean_score(t->value)).dump());
  });
}

coxtour_status coxtour_realize_integer(const coxtour_graph* g, const int* target,
                                       size_t n, coxtour_tournament** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = new coxtour_tournament{realize_deterministic(g->value, target_vector(target, n))};
  });
}

coxtour_status coxtour_search_integer(const coxtour_graph* g, const int* target,
                                      size_t n, int max_edges, coxtour_tournament** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    std::vector<int> t = target_vector(target, n);
    if (static_cast<int>(t.size()) != g->value.n())
      fail(ErrorCode::kInvalidArgument, "target length differs from vertex count");
    RationalVector rho = translation_vector(g->value);
    RationalVector x(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) x[i] = Rational(t[i]) - rho[i];
    auto found = find_deterministic(g->value, x, budget_for(max_edges));
    if (!found) fail(ErrorCode::kNotFound, "no deterministic tournament has this score");
    *out = new coxtour_tournament{std::move(*found)};
  });
}

coxtour_status coxtour_is_lattice_point(const coxtour_graph* g, const int* target,
                                        size_t n, int* inside) {
  return guarded([&] {
    require(g, "graph");
    require(inside, "inside");
    *inside = is_translated_lattice_point(g->value, target_vector(target, n)) ? 1 : 0;
  });
}

coxtour_status coxtour_random_only_points(const coxtour_graph* g, char** out_json) {
  return guarded([&] {
    require(g, "graph");
    require(out_json, "out_json");
    Json j = random_only_points(g->value);
    *out_json = duplicate(j.dump());
  });
}

coxtour_status coxtour_bt_forward(char kind, int n, const double* lambda, double* x) {
  return guarded([&] {
    require(lambda, "lambda");
    require(x, "x");
    RootType t = root_type(kind, n);
    std::vector<double> out = bt_forward(std::span(lambda, n), t);
    std::copy(out.begin(), out.end(), x);
  });
}

coxtour_status coxtour_bt_fit(char kind, int n, const char* scores, double tol,
                              int max_iterations, double* lambda, double* residual,
                              int* iterations) {
  return guarded([&] {
    require(scores, "scores");
    require(lambda, "lambda");
    RootType t = root_type(kind, n);
    RationalVector x = parse_rational_list(scores);
    if (static_cast<int>(x.size()) != n)
      fail(ErrorCode::kInvalidArgument, "expected " + std::to_string(n) + " scores");
    // Check the exact input before it is rounded to binary.
    require_bcd(t, "Bradley-Terry model");
    if (!strict_weak_submajorizes(abs(x), rho_complete(t)))
      fail(ErrorCode::kInfeasible,
           "Bradley-Terry fit needs |x| strictly inside the weak majorization bound");
    BtFitOptions options;
    if (tol > 0) options.tol = tol;
    if (max_iterations > 0) options.max_iterations = max_iterations;
    BtFitResult r = bt_fit(to_doubles(x), t, options);
    std::copy(r.lambda.begin(), r.lambda.end(), lambda);
    if (residual != nullptr) *residual = r.residual;
    if (iterations != nullptr) *iterations = r.iterations;
  });
}

coxtour_status coxtour_oracle_enumerate(const coxtour_graph* g, int max_edges,
                                        char** out_json) {
  return guarded([&] {
    require(g, "graph");
    require(out_json, "out_json");
    Json j = Json::array();
    for (const ScoreSequence& s : enumerate_deterministic_scores(g->value,
                                                                 budget_for(max_edges)))
      j.push_back(rationals_to_json(s));
    *out_json = duplicate(j.dump());
  });
}

coxtour_status coxtour_oracle_member(const coxtour_graph* g, const char* scores,
                                     int max_edges, int* member) {
  return guarded([&] {
    require(g, "graph");
    require(scores, "scores");
    require(member, "member");
    *member = lp_member(g->value, parse_rational_list(scores), budget_for(max_edges)) ? 1 : 0;
  });
}

}  // extern "C"
