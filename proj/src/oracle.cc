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

#include "coxtour/oracle.h"

#include <cstdint>
#include <string>

#include "coxtour/error.h"
#include "coxtour/lp.h"

namespace coxtour {
namespace {

void check_budget(const SignedGraph& g, const OracleBudget& budget) {
  require_valid(g);
  if (g.n() > budget.max_n ||
      static_cast<int>(g.edge_count()) > budget.max_edges || budget.max_edges > 30)
    fail(ErrorCode::kBudget, "oracle budget exceeded: n = " + std::to_string(g.n()) +
                                 ", |E| = " + std::to_string(g.edge_count()));
}

// Visits every 0/1 assignment in Gray-code order with the doubled score
// 2x = sum_e (2 p_e - 1) Gamma(e) kept as integers. `visit` returns true to stop.
template <class Visit>
void for_each_deterministic(const SignedGraph& g, Visit visit) {
  const int n = g.n();
  const int m = static_cast<int>(g.edge_count());
  std::vector<RootVector> cols;
  for (const Edge& e : g.edges()) cols.push_back(gamma(g, e));
  std::vector<int> twice(n, 0);
  for (const auto& c : cols)
    for (int i = 0; i < n; ++i) twice[i] -= c[i];
  std::uint64_t bits = 0;
  if (visit(bits, twice)) return;
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << m); ++k) {
    const int flip = __builtin_ctzll(k);
    bits ^= std::uint64_t{1} << flip;
    const int d = (bits >> flip & 1) ? 2 : -2;
    for (int i = 0; i < n; ++i) twice[i] += d * cols[flip][i];
    if (visit(bits, twice)) return;
  }
}

ScoreSequence halve(const std::vector<int>& twice) {
  ScoreSequence x;
  x.reserve(twice.size());
  for (int v : twice) x.emplace_back(v, 2);
  for (auto& q : x) q.canonicalize();
  return x;
}

}  // namespace

std::set<ScoreSequence> enumerate_deterministic_scores(const SignedGraph& g,
                                                       const OracleBudget& budget) {
  check_budget(g, budget);
  std::set<std::vector<int>> seen;
  for_each_deterministic(g, [&](std::uint64_t, const std::vector<int>& twice) {
    seen.insert(twice);
    return false;
  });
  std::set<ScoreSequence> out;
  for (const auto& s : seen) out.insert(halve(s));
  return out;
}

std::optional<Tournament> find_deterministic(const SignedGraph& g,
                                             std::span<const Rational> x,
                                             const OracleBudget& budget) {
  check_budget(g, budget);
  if (static_cast<int>(x.size()) != g.n())
    fail(ErrorCode::kInvalidArgument, "score length differs from vertex count");
  std::vector<int> want;
  for (const Rational& q : x) {
    Rational d = 2 * q;
    if (d.get_den() != 1 || !d.get_num().fits_sint_p()) return std::nullopt;
    want.push_back(static_cast<int>(d.get_num().get_si()));
  }
  std::optional<std::uint64_t> hit;
  for_each_deterministic(g, [&](std::uint64_t bits, const std::vector<int>& twice) {
    if (twice == want) hit = bits;
    return hit.has_value();
  });
  if (!hit) return std::nullopt;
  RationalVector probs;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    probs.emplace_back(static_cast<int>(*hit >> e & 1));
  return Tournament(g, std::move(probs));
}

bool lp_member(const SignedGraph& g, std::span<const Rational> x,
               const OracleBudget& budget) {
  check_budget(g, budget);
  if (static_cast<int>(x.size()) != g.n())
    fail(ErrorCode::kInvalidArgument, "score length differs from vertex count");
  // sum_e (p_e - 1/2) Gamma(e) == x  <=>  I p == x + 1/2 sum_e Gamma(e).
  RationalMatrix a = to_rational(incidence_matrix(g));
  RationalVector b(x.begin(), x.end());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) b[r] += a(r, c) / 2;
  return solve_box_feasibility(a, b).has_value();
}

bool hull_member(const std::vector<ScoreSequence>& points,
                 std::span<const Rational> x) {
  if (points.empty()) return false;
  const std::size_t n = x.size();
  RationalMatrix a(n + 1, points.size(), Rational(0));
  for (std::size_t c = 0; c < points.size(); ++c) {
    if (points[c].size() != n)
      fail(ErrorCode::kInvalidArgument, "hull points differ in length");
    for (std::size_t r = 0; r < n; ++r) a(r, c) = points[c][r];
    a(n, c) = 1;
  }
  RationalVector b(x.begin(), x.end());
  b.emplace_back(1);
  return solve_box_feasibility(a, b).has_value();
}

}  // namespace coxtour
