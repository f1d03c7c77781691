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

#include "coxtour/birkhoff.h"

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "test_support.h"

namespace coxtour {
namespace {

using testing::parse;
using testing::rv;

const RootType kC2 = RootType::make(RootKind::C, 2);

std::vector<SignedPermutation> all_signed_permutations(int n) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      SignedPermutation phi;
      for (int i = 0; i < n; ++i) phi.images.push_back(mask >> i & 1 ? -base[i] : base[i]);
      out.push_back(phi);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

FinitelySupportedMeasure point(int v) { return {{{v, Rational(1)}}}; }

TEST_CASE("signed permutations") {
  SignedPermutation phi{{2, -1}};
  CHECK(phi.valid());
  CHECK(format_permutation(phi) == "[2, -1]");
  CHECK_FALSE(SignedPermutation{{2, -2}}.valid());
  CHECK_FALSE(SignedPermutation{{0, 1}}.valid());
  CHECK(SignedPermutation::identity(3).images == std::vector<int>{1, 2, 3});
  RationalMatrix m = phi.matrix();
  CHECK(m(0, 1) == 1);
  CHECK(m(1, 0) == -1);
  CHECK(m(0, 0) == 0);
}

TEST_CASE("vertex tournament of [2, -1] on C2") {
  Tournament v = vertex_tournament(SignedPermutation{{2, -1}}, kC2);
  CHECK(v.is_deterministic());
  CHECK(mean_score(v) == rv({2, -1}));
}

TEST_CASE("every vertex tournament scores A_phi rho") {
  for (RootKind k : {RootKind::B, RootKind::C, RootKind::D})
    for (int n = 1; n <= 4; ++n) {
      RootType t = RootType::make(k, n);
      for (const auto& phi : all_signed_permutations(n)) {
        Tournament v = vertex_tournament(phi, t);
        REQUIRE(v.is_deterministic());
        REQUIRE(mean_score(v) == multiply(phi.matrix(), rho_complete(t)));
      }
    }
}

TEST_CASE("signed transfer") {
  RationalMatrix a = signed_transfer(rv({Rational(1, 2), -1}), kC2);
  CHECK(multiply(a, rho_complete(kC2)) == rv({Rational(1, 2), -1}));
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(a(0, j) >= 0);
    CHECK(a(1, j) <= 0);
  }
  CHECK_ERROR_CODE(signed_transfer(rv({0, 3}), kC2), ErrorCode::kInfeasible);

  testing::Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    RootType t = RootType::make(std::array{RootKind::B, RootKind::C, RootKind::D}[trial % 3],
                                1 + trial % 6);
    ScoreSequence x = testing::random_feasible(rng, t);
    RationalMatrix s = signed_transfer(x, t);
    REQUIRE(multiply(s, rho_complete(t)) == x);
    RationalMatrix w(t.n, t.n, Rational(0));
    for (int i = 0; i < t.n; ++i)
      for (int j = 0; j < t.n; ++j) w(i, j) = abs(s(i, j));
    REQUIRE(is_doubly_substochastic(w));
  }
}

TEST_CASE("padding") {
  RationalMatrix b(2, 2, Rational(0));
  b(0, 0) = Rational(1, 2);
  RationalMatrix e = pad_to_doubly_stochastic(b);
  RationalMatrix expected(2, 2, Rational(0));
  expected(0, 0) = Rational(1, 2);
  expected(1, 1) = 1;
  CHECK(e == expected);

  RationalMatrix full(2, 2, Rational(1, 2));
  CHECK(pad_to_doubly_stochastic(full) == RationalMatrix(2, 2, Rational(0)));

  RationalMatrix bad(2, 2, Rational(0));
  bad(0, 0) = 2;
  CHECK_ERROR_CODE(pad_to_doubly_stochastic(bad), ErrorCode::kInvalidArgument);

  testing::Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    RationalMatrix m(n, n, Rational(0));
    RationalVector row(n, Rational(1)), col(n, Rational(1));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational cap = std::min(row[i], col[j]);
        m(i, j) = testing::random_rational(rng, 0, cap, 6);
        row[i] -= m(i, j);
        col[j] -= m(i, j);
      }
    RationalMatrix sum = pad_to_doubly_stochastic(m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        REQUIRE(sum(i, j) >= 0);
        sum(i, j) += m(i, j);
      }
    REQUIRE(is_doubly_stochastic(sum));
  }
}

TEST_CASE("decomposition of the zero score on C1") {
  SignedDecomposition d = birkhoff_decompose(rv({0}), RootType::make(RootKind::C, 1));
  REQUIRE(d.terms.size() == 2);
  CHECK(d.terms[0].weight == Rational(1, 2));
  CHECK(d.terms[1].weight == Rational(1, 2));
  std::vector<std::vector<int>> images{d.terms[0].perm.images, d.terms[1].perm.images};
  std::sort(images.begin(), images.end());
  CHECK(images == std::vector<std::vector<int>>{{-1}, {1}});
  CHECK(format_decomposition(d).find("[1] @ 1/2\n") != std::string::npos);
}

TEST_CASE("decomposition of a vertex is the vertex") {
  SignedDecomposition d = birkhoff_decompose(rv({2, -1}), kC2);
  REQUIRE(d.terms.size() == 1);
  CHECK(d.terms[0].weight == 1);
  CHECK(d.terms[0].perm.images == std::vector<int>{2, -1});
  CHECK(format_decomposition(d) == "[2, -1] @ 1\n");
}

TEST_CASE("random decompositions") {
  testing::Rng rng(17);
  for (RootKind k : {RootKind::B, RootKind::C, RootKind::D})
    for (int n = 1; n <= 6; ++n) {
      RootType t = RootType::make(k, n);
      for (int trial = 0; trial < 100; ++trial) {
        ScoreSequence x = testing::random_feasible(rng, t);
        SignedDecomposition d = birkhoff_decompose(x, t);
        REQUIRE(d.rounds <= n * n + 2 * n);
        Rational total = 0;
        RationalVector acc(n, Rational(0));
        for (const auto& term : d.terms) {
          REQUIRE(term.weight > 0);
          REQUIRE(term.perm.valid());
          total += term.weight;
          RationalVector v = multiply(term.perm.matrix(), rho_complete(t));
          for (int i = 0; i < n; ++i) acc[i] += term.weight * v[i];
        }
        REQUIRE(total == 1);
        REQUIRE(acc == x);
        REQUIRE(mean_score(mixture_tournament(d, t)) == x);
      }
    }
}

TEST_CASE("psi") {
  CHECK(psi_pair(point(2), point(1), -1) == Rational(1, 2));
  CHECK(psi_pair(point(1), point(-1), +1) == 0);
  FinitelySupportedMeasure coin{{{1, Rational(1, 2)}, {-1, Rational(1, 2)}}};
  CHECK(psi_pair(coin, point(1), -1) == Rational(-1, 4));
  FinitelySupportedMeasure skew{{{2, Rational(3, 4)}, {-1, Rational(1, 4)}}};
  CHECK(psi_solo(skew) == Rational(1, 2));
  CHECK(skew.total() == 1);
  CHECK_ERROR_CODE(psi_pair(coin, coin, 0), ErrorCode::kInvalidArgument);
}

TEST_CASE("Strassen measures have unit column mass") {
  testing::Rng rng(31);
  for (int n = 1; n <= 5; ++n) {
    RootType t = RootType::make(RootKind::C, n);
    for (int trial = 0; trial < 50; ++trial) {
      ScoreSequence x = testing::random_feasible(rng, t);
      auto nu = strassen_measures(x, t);
      REQUIRE(nu.size() == static_cast<std::size_t>(n));
      for (const auto& m : nu) REQUIRE(m.total() == 1);
      for (int j = 1; j <= n; ++j) {
        Rational col = 0;
        for (const auto& m : nu)
          for (int v : {j, -j})
            if (auto it = m.mass.find(v); it != m.mass.end()) col += it->second;
        REQUIRE(col == 1);
      }
    }
  }
}

TEST_CASE("Strassen construction on C2") {
  ScoreSequence x = rv({Rational(1, 2), 1});
  CHECK(mean_score(strassen_construct(x, kC2)) == x);
  auto nu = strassen_measures(x, kC2);
  Tournament naive = strassen_tournament(nu, kC2, SoloRule::kNaive);
  CHECK(mean_score(naive) == rv({Rational(17, 36), Rational(19, 18)}));
  CHECK(mean_score(naive) != x);
}

TEST_CASE("Strassen construction on random C scores") {
  testing::Rng rng(37);
  for (int n = 1; n <= 5; ++n) {
    RootType t = RootType::make(RootKind::C, n);
    for (int trial = 0; trial < 100; ++trial) {
      ScoreSequence x = testing::random_feasible(rng, t);
      REQUIRE(mean_score(strassen_construct(x, t)) == x);
    }
  }
}

TEST_CASE("Strassen construction is type C only") {
  CHECK_ERROR_CODE(strassen_construct(rv({0, 0}), RootType::make(RootKind::B, 2)),
                   ErrorCode::kUnsupportedType);
  CHECK_ERROR_CODE(strassen_construct(rv({0, 0}), RootType::make(RootKind::D, 2)),
                   ErrorCode::kUnsupportedType);
}

}  // namespace
}  // namespace coxtour
