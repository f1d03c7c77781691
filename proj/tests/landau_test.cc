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

#include "doctest.h"
#include "test_support.h"

namespace coxtour {
namespace {

using testing::rv;

const RootType kD2 = RootType::make(RootKind::D, 2);

SignedGraph digon() { return SignedGraph(kD2, {{1, 0}}, {{1, 0}}); }
SignedGraph single_loop() { return SignedGraph(RootType::make(RootKind::C, 1), {}, {}, {}, {0}); }
SignedGraph segment() { return SignedGraph(kD2, {{1, 0}}); }

RationalVector shifted(const Tournament& t) {
  RationalVector s = mean_score(t), rho = translation_vector(t.graph());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += rho[i];
  return s;
}

RationalVector as_rationals(std::span<const int> t) {
  RationalVector out;
  for (int v : t) out.emplace_back(v);
  return out;
}

TEST_CASE("single competitive game") {
  Tournament r = realize_deterministic(segment(), std::vector{1, 0});
  CHECK(r.probs() == rv({0}));
  CHECK(realize_deterministic(segment(), std::vector{0, 1}).probs() == rv({1}));
  CHECK_ERROR_CODE(realize_deterministic(segment(), std::vector{1, 1}), ErrorCode::kInfeasible);
  CHECK_ERROR_CODE(realize_deterministic(segment(), std::vector{1}), ErrorCode::kInvalidArgument);
}

TEST_CASE("unbalanced graphs are refused") {
  CHECK_ERROR_CODE(realize_deterministic(digon(), std::vector{1, 0}), ErrorCode::kPrecondition);
  CHECK_ERROR_CODE(realize_deterministic(single_loop(), std::vector{0}),
                   ErrorCode::kPrecondition);
}

TEST_CASE("classical tournaments on three players") {
  SignedGraph tri(RootType::make(RootKind::D, 3), {{1, 0}, {2, 0}, {2, 1}});
  std::vector<IntegerTarget> points = zonotope_lattice_points(tri);
  CHECK(points.size() == 7);
  CHECK(points == deterministic_targets(tri));
  for (const auto& t : points) {
    Tournament r = realize_deterministic(tri, t);
    CHECK(r.is_deterministic());
    CHECK(shifted(r) == as_rationals(t));
  }
}

TEST_CASE("rounding from a fractional start") {
  SignedGraph tri(RootType::make(RootKind::D, 3), {{1, 0}, {2, 0}, {2, 1}});
  RationalMatrix a = to_rational(incidence_matrix(tri));
  RationalVector half(3, Rational(1, 2));
  RationalVector p = round_to_integral(a, half);
  for (const Rational& v : p) CHECK((v == 0 || v == 1));
  CHECK(multiply(a, p) == multiply(a, half));
  CHECK(last_rounding_steps() >= 1);
  CHECK(last_rounding_steps() <= 3);

  testing::Rng rng(8);
  for (int n = 2; n <= 4; ++n)
    for (const SignedGraph& g : testing::all_graphs(RootType::make(RootKind::D, n), 5)) {
      if (!is_balanced(g) || g.edge_count() == 0) continue;
      RationalMatrix m = to_rational(incidence_matrix(g));
      // A fractional start with integral image: average two vertices.
      RationalVector u = testing::random_probabilities(rng, g.edge_count(), 1);
      RationalVector w = testing::random_probabilities(rng, g.edge_count(), 1);
      RationalVector start(g.edge_count());
      for (std::size_t e = 0; e < start.size(); ++e) start[e] = (u[e] + w[e]) / 2;
      RationalVector image = multiply(m, start);
      if (!std::all_of(image.begin(), image.end(), [](const Rational& v) { return v.get_den() == 1; }))
        continue;
      RationalVector q = round_to_integral(m, start);
      REQUIRE(multiply(m, q) == image);
      for (const Rational& v : q) REQUIRE((v == 0 || v == 1));
      REQUIRE(last_rounding_steps() <= static_cast<int>(g.edge_count()));
    }
}

TEST_CASE("lattice points reached only at random") {
  CHECK(random_only_points(digon()) == std::vector<IntegerTarget>{{1, 1}});
  CHECK(random_only_points(single_loop()) == std::vector<IntegerTarget>{{1}});
  CHECK(random_only_points(segment()).empty());
  CHECK(zonotope_lattice_points(digon()).size() == 5);
}

TEST_CASE("lattice points match deterministic scores when G' is balanced") {
  for (RootKind k : {RootKind::B, RootKind::C, RootKind::D})
    for (int n = 1; n <= 3; ++n)
      for (const SignedGraph& g : testing::all_graphs(RootType::make(k, n), 6)) {
        if (!is_balanced(g, /*drop_half_edges=*/true)) continue;
        std::vector<IntegerTarget> points = zonotope_lattice_points(g);
        REQUIRE(points == deterministic_targets(g));
        for (const auto& t : points) {
          Tournament r = realize_deterministic(g, t);
          REQUIRE(r.is_deterministic());
          REQUIRE(shifted(r) == as_rationals(t));
        }
      }
}

TEST_CASE("unbalanced graphs without half-edges have random-only points") {
  for (RootKind k : {RootKind::C, RootKind::D})
    for (int n = 1; n <= 3; ++n)
      for (const SignedGraph& g : testing::all_graphs(RootType::make(k, n), 6)) {
        if (is_balanced(g)) continue;
        REQUIRE_FALSE(random_only_points(g).empty());
      }
}

TEST_CASE("lattice scan limits") {
  CHECK_ERROR_CODE(zonotope_lattice_points(complete_graph(RootType::make(RootKind::D, 5))),
                   ErrorCode::kBudget);
  CHECK_ERROR_CODE(zonotope_lattice_points(complete_graph(RootType::make(RootKind::C, 3))),
                   ErrorCode::kBudget);
}

}  // namespace
}  // namespace coxtour
