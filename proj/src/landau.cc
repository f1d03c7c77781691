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

#include "coxtour/landau.h"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "coxtour/error.h"
#include "coxtour/lp.h"

namespace coxtour {
namespace {

thread_local int rounding_steps = 0;

void check_small(const SignedGraph& g) {
  require_valid(g);
  if (g.n() > 4 || g.edge_count() > 8)
    fail(ErrorCode::kBudget, "lattice scan is limited to n <= 4 and |E| <= 8");
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace

RationalVector round_to_integral(const RationalMatrix& a, RationalVector p) {
  if (p.size() != a.cols())
    fail(ErrorCode::kInvalidArgument, "point length differs from column count");
  for (const Rational& v : p)
    if (v < 0 || v > 1) fail(ErrorCode::kInvalidArgument, "point must lie in [0, 1]^m");
  rounding_steps = 0;
  while (true) {
    std::vector<std::size_t> frac;
    for (std::size_t e = 0; e < p.size(); ++e)
      if (!is_integral(p[e])) frac.push_back(e);
    if (frac.empty()) break;
    if (rounding_steps > static_cast<int>(p.size()))
      fail(ErrorCode::kInternal, "rounding did not terminate");

    RationalMatrix sub(a.rows(), frac.size());
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t k = 0; k < frac.size(); ++k) sub(r, k) = a(r, frac[k]);
    auto dir = kernel_vector(sub);
    if (!dir) fail(ErrorCode::kInternal, "fractional columns are independent");

    // Largest step keeping every moved coordinate inside [0, 1].
    std::optional<Rational> step;
    for (std::size_t k = 0; k < frac.size(); ++k) {
      const Rational& c = (*dir)[k];
      if (c == 0) continue;
      Rational room = c > 0 ? Rational((1 - p[frac[k]]) / c) : Rational(-p[frac[k]] / c);
      if (!step || room < *step) step = room;
    }
    for (std::size_t k = 0; k < frac.size(); ++k) p[frac[k]] += *step * (*dir)[k];
    ++rounding_steps;
  }

  return p;
}

Tournament realize_deterministic(const SignedGraph& g, std::span<const int> t) {
  require_valid(g);
  if (static_cast<int>(t.size()) != g.n())
    fail(ErrorCode::kInvalidArgument, "target length differs from vertex count");
  if (!is_balanced(g, /*drop_half_edges=*/true))
    fail(ErrorCode::kPrecondition,
         "graph without half-edges is not balanced; integer realization is not guaranteed");

  // s + rho == t with s = sum (p - 1/2) Gamma  <=>  I p == t - rho + 1/2 sum Gamma.
  RationalMatrix a = to_rational(incidence_matrix(g));
  RationalVector rho = translation_vector(g);
  RationalVector b(g.n());
  for (int r = 0; r < g.n(); ++r) {
    b[r] = Rational(t[r]) - rho[r];
    for (std::size_t c = 0; c < a.cols(); ++c) b[r] += a(r, c) / 2;
  }
  auto solved = solve_box_feasibility(a, b);
  if (!solved)
    fail(ErrorCode::kInfeasible, "target lies outside the shifted zonotope");
  RationalVector p = std::move(*solved);

  p = round_to_integral(a, std::move(p));
  if (multiply(a, p) != b) fail(ErrorCode::kInternal, "rounded solution drifted");
  return Tournament(g, std::move(p));
}

int last_rounding_steps() { return rounding_steps; }

std::vector<IntegerTarget> zonotope_lattice_points(const SignedGraph& g) {
  check_small(g);
  const int n = g.n();
  // Shifted scores s + rho satisfy 0 <= t_i <= sum_e |Gamma(e)_i|.
  std::vector<int> hi(n, 0);
  for (const Edge& e : g.edges()) {
    RootVector r = gamma(g, e);
    for (int i = 0; i < n; ++i) hi[i] += std::abs(r[i]);
  }
  std::vector<IntegerTarget> out;
  IntegerTarget cur(n);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (is_translated_lattice_point(g, cur)) out.push_back(cur);
      return;
    }
    for (int v = 0; v <= hi[i]; ++v) {
      cur[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<IntegerTarget> deterministic_targets(const SignedGraph& g,
                                                 const OracleBudget& budget) {
  RationalVector rho = translation_vector(g);
  std::set<IntegerTarget> seen;
  for (const ScoreSequence& s : enumerate_deterministic_scores(g, budget)) {
    IntegerTarget t;
    for (int i = 0; i < g.n(); ++i) {
      Rational v = s[i] + rho[i];
      if (!is_integral(v)) fail(ErrorCode::kInternal, "shifted score is not integral");
      t.push_back(static_cast<int>(v.get_num().get_si()));
    }
    seen.insert(std::move(t));
  }
  return {seen.begin(), seen.end()};
}

std::vector<IntegerTarget> random_only_points(const SignedGraph& g) {
  check_small(g);
  std::vector<IntegerTarget> all = zonotope_lattice_points(g);
  std::vector<IntegerTarget> reached = deterministic_targets(g);
  std::vector<IntegerTarget> out;
  std::set_difference(all.begin(), all.end(), reached.begin(), reached.end(),
                      std::back_inserter(out));
  return out;
}

}  // namespace coxtour
