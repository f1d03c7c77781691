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

#include "doctest.h"
#include "test_support.h"

namespace coxtour {
namespace {

using testing::rv;

const RootType kD2 = RootType::make(RootKind::D, 2);

SignedGraph digon() { return SignedGraph(kD2, {{1, 0}}, {{1, 0}}); }

std::set<ScoreSequence> translated(const SignedGraph& g) {
  RationalVector rho = translation_vector(g);
  std::set<ScoreSequence> out;
  for (ScoreSequence s : enumerate_deterministic_scores(g)) {
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += rho[i];
    out.insert(s);
  }
  return out;
}

TEST_CASE("deterministic scores of small graphs") {
  CHECK(translated(digon()) ==
        std::set<ScoreSequence>{rv({0, 1}), rv({1, 0}), rv({1, 2}), rv({2, 1})});
  SignedGraph loop(RootType::make(RootKind::C, 1), {}, {}, {}, {0});
  CHECK(translated(loop) == std::set<ScoreSequence>{rv({0}), rv({2})});
  SignedGraph empty(RootType::make(RootKind::B, 3));
  CHECK(enumerate_deterministic_scores(empty) == std::set<ScoreSequence>{rv({0, 0, 0})});
}

TEST_CASE("exhaustive search") {
  auto found = find_deterministic(digon(), rv({0, 1}));
  REQUIRE(found);
  CHECK(mean_score(*found) == rv({0, 1}));
  CHECK_FALSE(find_deterministic(digon(), rv({0, 0})));
}

TEST_CASE("LP membership on the digon") {
  CHECK(lp_member(digon(), rv({0, 0})));
  CHECK(lp_member(digon(), rv({Rational(1, 2), Rational(1, 2)})));
  CHECK(lp_member(digon(), rv({0, -1})));
  CHECK_FALSE(lp_member(digon(), rv({1, 1})));
  CHECK_FALSE(lp_member(digon(), rv({Rational(3, 4), Rational(1, 2)})));
}

TEST_CASE("convex hull membership") {
  std::vector<ScoreSequence> square{rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})};
  CHECK(hull_member(square, rv({Rational(1, 2), Rational(1, 3)})));
  CHECK(hull_member(square, rv({1, 1})));
  CHECK_FALSE(hull_member(square, rv({Rational(3, 2), 0})));
  CHECK_FALSE(hull_member({}, rv({0, 0})));
}

TEST_CASE("hull of deterministic scores, LP and the face test agree") {
  testing::Rng rng(12);
  for (RootKind k : {RootKind::B, RootKind::C, RootKind::D})
    for (int n = 1; n <= 3; ++n)
      for (const SignedGraph& g : testing::all_graphs(RootType::make(k, n), 4)) {
        auto scores = enumerate_deterministic_scores(g);
        std::vector<ScoreSequence> points(scores.begin(), scores.end());
        for (int trial = 0; trial < 5; ++trial) {
          ScoreSequence x(n);
          for (auto& v : x) v = testing::random_rational(rng, -2, 2, 4);
          const bool lp = lp_member(g, x);
          REQUIRE(hull_member(points, x) == lp);
          REQUIRE(is_mean_score(g, x) == lp);
        }
      }
}

TEST_CASE("budgets") {
  OracleBudget small;
  small.max_edges = 2;
  CHECK_ERROR_CODE(enumerate_deterministic_scores(complete_graph(RootType::make(RootKind::C, 2)),
                                                  small),
                   ErrorCode::kBudget);
  CHECK_ERROR_CODE(enumerate_deterministic_scores(SignedGraph(RootType::make(RootKind::D, 7))),
                   ErrorCode::kBudget);
}

}  // namespace
}  // namespace coxtour
