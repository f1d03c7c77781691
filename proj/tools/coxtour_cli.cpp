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

// Command-line front end over the C API.
//
// Exit codes: 0 success or member, 1 non-member or infeasible, 2 usage or
// I/O error, 3 failed precondition (unbalanced graph, unsupported type,
// oracle budget).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "coxtour/coxtour.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

// Carries a status out of a command body.
struct Failure {
  coxtour_status status;
  std::string message;
};

int exit_code_for(coxtour_status s) {
  switch (s) {
    case COXTOUR_OK: return kExitOk;
    case COXTOUR_INFEASIBLE:
    case COXTOUR_NO_CONVERGENCE: return kExitNo;
    case COXTOUR_UNSUPPORTED_TYPE:
    case COXTOUR_PRECONDITION:
    case COXTOUR_BUDGET_EXCEEDED: return kExitPrecondition;
    default: return kExitUsage;
  }
}

void check(coxtour_status s) {
  if (s != COXTOUR_OK) throw Failure{s, coxtour_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { coxtour_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
  void operator()(coxtour_graph* g) const { coxtour_graph_free(g); }
};
using Graph = std::unique_ptr<coxtour_graph, GraphDeleter>;

struct TournamentDeleter {
  void operator()(coxtour_tournament* t) const { coxtour_tournament_free(t); }
};
using TournamentHandle = std::unique_ptr<coxtour_tournament, TournamentDeleter>;

std::string take(char* s) {
  OwnedString owned(s);
  return s ? std::string(s) : std::string();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{COXTOUR_PARSE_ERROR, "cannot read " + path};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// A file path or the literal text itself.
std::string file_or_inline(const std::string& arg) {
  std::ifstream in(arg, std::ios::binary);
  if (!in) return arg;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Graph load_graph(const std::string& path) {
  coxtour_graph* g = nullptr;
  check(coxtour_graph_from_json(read_text(path).c_str(), &g));
  return Graph(g);
}

// Number of entries in a score list, without interpreting them.
int count_scores(const std::string& text) {
  int count = 0;
  bool in_token = false;
  bool comment = false;
  for (char c : text) {
    if (comment) {
      comment = c != '\n';
      continue;
    }
    if (c == '#') {
      comment = true;
      in_token = false;
      continue;
    }
    bool sep = c == ',' || c == ';' || c == '(' || c == ')' || c == '[' || c == ']' ||
               std::isspace(static_cast<unsigned char>(c));
    if (!sep && !in_token) ++count;
    in_token = !sep;
  }
  return count;
}

// "C" or "C7"; the rank defaults to the number of scores.
struct TypeSpec {
  char kind = 'C';
  int n = 0;
};

TypeSpec parse_type(const std::string& text, int fallback_n) {
  if (text.empty()) throw Failure{COXTOUR_INVALID_ARGUMENT, "--type is empty"};
  TypeSpec t;
  t.kind = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (text.size() > 1) {
    try {
      std::size_t used = 0;
      t.n = std::stoi(text.substr(1), &used);
      if (used != text.size() - 1) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw Failure{COXTOUR_PARSE_ERROR, "bad root type '" + text + "'"};
    }
  } else {
    t.n = fallback_n;
  }
  return t;
}

std::vector<int> parse_target(const std::string& arg) {
  std::string text = file_or_inline(arg);
  for (char& c : text)
    if (c == ',' || c == ';' || c == '(' || c == ')' || c == '[' || c == ']') c = ' ';
  std::istringstream in(text);
  std::vector<int> out;
  std::string token;
  while (in >> token) {
    if (token[0] == '#') {
      std::getline(in, token);
      continue;
    }
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw Failure{COXTOUR_PARSE_ERROR, "target entries must be integers: '" + token + "'"};
    }
  }
  return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json tournament_json(const coxtour_tournament* t) {
  char* s = nullptr;
  check(coxtour_tournament_to_json(t, &s));
  return Json::parse(take(s));
}

// Subcommand bodies return an exit code.

int run_info(const std::string& type, const std::string& graph_path,
             const std::vector<std::string>& subsets) {
  Graph g;
  if (!graph_path.empty()) {
    g = load_graph(graph_path);
  } else {
    TypeSpec t = parse_type(type, 0);
    if (t.n <= 0) throw Failure{COXTOUR_INVALID_ARGUMENT, "info needs --type like C7 or --graph"};
    coxtour_graph* raw = nullptr;
    check(coxtour_graph_complete(t.kind, t.n, &raw));
    g.reset(raw);
  }
  char* s = nullptr;
  check(coxtour_graph_info(g.get(), &s));
  Json j = Json::parse(take(s));
  if (!subsets.empty()) {
    Json h = Json::object();
    for (const std::string& subset : subsets) {
      char* v = nullptr;
      check(coxtour_graph_h_value(g.get(), subset.c_str(), &v));
      h[subset] = take(v);
    }
    j["h"] = std::move(h);
  }
  emit(j);
  return kExitOk;
}

int run_check(const std::string& graph_path, bool complete, const std::string& type,
              const std::string& scores_arg) {
  std::string scores = file_or_inline(scores_arg);
  int member = 0;
  char* reason = nullptr;
  if (complete) {
    TypeSpec t = parse_type(type, count_scores(scores));
    check(coxtour_is_mean_score_complete(t.kind, t.n, scores.c_str(), &member, &reason));
  } else {
    if (graph_path.empty())
      throw Failure{COXTOUR_INVALID_ARGUMENT, "check needs --graph or --complete"};
    Graph g = load_graph(graph_path);
    check(coxtour_is_mean_score(g.get(), scores.c_str(), &member, &reason));
  }
  Json j;
  j["member"] = member != 0;
  std::string why = take(reason);
  if (!why.empty()) j["reason"] = why;
  emit(j);
  return member ? kExitOk : kExitNo;
}

int run_construct(const std::string& type, const std::string& scores_arg,
                  const std::string& method, bool trace) {
  std::string scores = file_or_inline(scores_arg);
  TypeSpec t = parse_type(type, count_scores(scores));
  coxtour_method m = COXTOUR_METHOD_HH;
  if (method == "birkhoff") m = COXTOUR_METHOD_BIRKHOFF;
  if (method == "strassen") m = COXTOUR_METHOD_STRASSEN;
  coxtour_tournament* raw = nullptr;
  check(coxtour_construct(t.kind, t.n, scores.c_str(), m, &raw));
  TournamentHandle tour(raw);
  if (trace) {
    char* text = nullptr;
    if (m == COXTOUR_METHOD_HH) {
      check(coxtour_hh_trace(t.kind, t.n, scores.c_str(), &text));
      std::cerr << take(text);
    } else if (m == COXTOUR_METHOD_BIRKHOFF) {
      check(coxtour_birkhoff_terms(t.kind, t.n, scores.c_str(), &text));
      std::cerr << take(text);
    }
  }
  emit(tournament_json(tour.get()));
  return kExitOk;
}

int run_fit_bt(const std::string& type, const std::string& scores_arg, double tol,
               int max_iterations) {
  std::string scores = file_or_inline(scores_arg);
  TypeSpec t = parse_type(type, count_scores(scores));
  if (t.n <= 0) throw Failure{COXTOUR_INVALID_ARGUMENT, "no scores given"};
  std::vector<double> lambda(t.n);
  double residual = 0;
  int iterations = 0;
  check(coxtour_bt_fit(t.kind, t.n, scores.c_str(), tol, max_iterations, lambda.data(),
                       &residual, &iterations));
  Json j;
  j["lambda"] = lambda;
  j["residual"] = residual;
  j["iterations"] = iterations;
  emit(j);
  return kExitOk;
}

int run_realize(const std::string& graph_path, const std::string& target_arg,
                int max_edges) {
  Graph g = load_graph(graph_path);
  std::vector<int> target = parse_target(target_arg);
  coxtour_tournament* raw = nullptr;
  coxtour_status s = coxtour_realize_integer(g.get(), target.data(), target.size(), &raw);
  if (s == COXTOUR_OK) {
    TournamentHandle tour(raw);
    Json j;
    j["method"] = "rounding";
    j["tournament"] = tournament_json(tour.get());
    emit(j);
    return kExitOk;
  }
  if (s != COXTOUR_PRECONDITION) check(s);

  // Unbalanced: balance is sufficient but not necessary, so search small cases.
  std::string why = coxtour_last_error();
  int inside = 0;
  check(coxtour_is_lattice_point(g.get(), target.data(), target.size(), &inside));
  if (!inside) throw Failure{COXTOUR_INFEASIBLE, "target lies outside the shifted zonotope"};
  s = coxtour_search_integer(g.get(), target.data(), target.size(), max_edges, &raw);
  if (s == COXTOUR_NOT_FOUND)
    throw Failure{COXTOUR_PRECONDITION,
                  why + "; exhaustive search finds no deterministic tournament"};
  check(s);
  TournamentHandle tour(raw);
  Json j;
  j["method"] = "search";
  j["tournament"] = tournament_json(tour.get());
  emit(j);
  return kExitOk;
}

int run_balance(const std::string& graph_path) {
  Graph g = load_graph(graph_path);
  int balanced = 0, without_half = 0;
  check(coxtour_graph_is_balanced(g.get(), 0, &balanced));
  check(coxtour_graph_is_balanced(g.get(), 1, &without_half));
  Json j;
  j["balanced"] = balanced != 0;
  j["balanced_without_half_edges"] = without_half != 0;
  emit(j);
  return kExitOk;
}

int run_oracle_enumerate(const std::string& graph_path, int max_edges) {
  Graph g = load_graph(graph_path);
  char* s = nullptr;
  check(coxtour_oracle_enumerate(g.get(), max_edges, &s));
  Json j;
  j["scores"] = Json::parse(take(s));
  emit(j);
  return kExitOk;
}

int run_oracle_member(const std::string& graph_path, const std::string& scores_arg,
                      int max_edges) {
  Graph g = load_graph(graph_path);
  std::string scores = file_or_inline(scores_arg);
  int member = 0;
  check(coxtour_oracle_member(g.get(), scores.c_str(), max_edges, &member));
  Json j;
  j["member"] = member != 0;
  emit(j);
  return member ? kExitOk : kExitNo;
}

int run_verify(const std::string& path) {
  coxtour_tournament* raw = nullptr;
  check(coxtour_tournament_from_json(read_text(path).c_str(), &raw));
  TournamentHandle tour(raw);
  char* s = nullptr;
  check(coxtour_tournament_mean_score(tour.get(), &s));
  Json j;
  j["mean_score"] = Json::parse(take(s));
  emit(j);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter tournaments on signed graphs of types B, C and D"};
  app.set_version_flag("--version", coxtour_version());
  app.require_subcommand(1);

  std::string graph_path, type, scores, method = "hh", target, tournament_path;
  std::vector<std::string> subsets;
  bool complete = false, trace = false;
  double tol = 1e-9;
  int max_iterations = 200, max_edges = 20;

  auto* info = app.add_subcommand("info", "Print delta, rho, rho_G and optional h-values");
  info->add_option("--type", type, "Root type with rank, e.g. C7");
  info->add_option("--graph", graph_path, "Graph JSON file");
  info->add_option("--subset", subsets, "Signed subset for an h-value, e.g. \"1,-3\" (repeatable)");

  auto* chk = app.add_subcommand("check", "Decide whether scores are a mean score sequence");
  chk->add_option("--graph", graph_path, "Graph JSON file");
  chk->add_flag("--complete", complete, "Use the complete graph of --type");
  chk->add_option("--type", type, "Root type (B, C, D), rank optional");
  chk->add_option("--scores", scores, "Score file or inline list")->required();

  auto* cons = app.add_subcommand("construct", "Build a tournament on the complete graph");
  cons->add_option("--type", type, "Root type (B, C, D), rank optional")->required();
  cons->add_option("--scores", scores, "Score file or inline list")->required();
  cons->add_option("--method", method, "hh, birkhoff or strassen")
      ->check(CLI::IsMember({"hh", "birkhoff", "strassen"}));
  cons->add_flag("--trace", trace, "Print the step table or decomposition to stderr");

  auto* fit = app.add_subcommand("fit-bt", "Fit Bradley-Terry strengths to scores");
  fit->add_option("--type", type, "Root type (B, C, D), rank optional")->required();
  fit->add_option("--scores", scores, "Score file or inline list")->required();
  fit->add_option("--tol", tol, "Max-norm residual target");
  fit->add_option("--max-iter", max_iterations, "Newton iteration cap");

  auto* real = app.add_subcommand("realize-int", "Deterministic tournament for an integer target");
  real->add_option("--graph", graph_path, "Graph JSON file")->required();
  real->add_option("--target", target, "Target file or inline integer list")->required();
  real->add_option("--max-edges", max_edges, "Edge cap for the search fallback");

  auto* bal = app.add_subcommand("balance", "Report whether the graph is balanced");
  bal->add_option("--graph", graph_path, "Graph JSON file")->required();

  auto* ver = app.add_subcommand("verify", "Reload a tournament JSON and recheck its scores");
  ver->add_option("--tournament", tournament_path, "Tournament JSON file")->required();

  auto* orc = app.add_subcommand("oracle", "Brute-force ground truth");
  orc->require_subcommand(1);
  auto* oenum = orc->add_subcommand("enumerate", "Scores of all deterministic tournaments");
  oenum->add_option("--graph", graph_path, "Graph JSON file")->required();
  oenum->add_option("--max-edges", max_edges, "Edge budget");
  auto* omem = orc->add_subcommand("member", "Membership by linear programming");
  omem->add_option("--graph", graph_path, "Graph JSON file")->required();
  omem->add_option("--scores", scores, "Score file or inline list")->required();
  omem->add_option("--max-edges", max_edges, "Edge budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*info) return run_info(type, graph_path, subsets);
    if (*chk) return run_check(graph_path, complete, type, scores);
    if (*cons) return run_construct(type, scores, method, trace);
    if (*fit) return run_fit_bt(type, scores, tol, max_iterations);
    if (*real) return run_realize(graph_path, target, max_edges);
    if (*bal) return run_balance(graph_path);
    if (*ver) return run_verify(tournament_path);
    if (*oenum) return run_oracle_enumerate(graph_path, max_edges);
    if (*omem) return run_oracle_member(graph_path, scores, max_edges);
  } catch (const Failure& f) {
    std::cerr << "coxtour: " << coxtour_status_name(f.status) << ": " << f.message << "\n";
    return exit_code_for(f.status);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "coxtour: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
