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

#include "coxtour/lp.h"

#include "doctest.h"
#include "test_support.h"

namespace coxtour {
namespace {

using testing::rv;

RationalMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  RationalMatrix m(rows.size(), rows.begin()->size(), Rational(0));
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (int v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

bool in_box(const RationalVector& p) {
  for (const Rational& v : p)
    if (v < 0 || v > 1) return false;
  return true;
}

TEST_CASE("box feasibility") {
  RationalMatrix a = from_rows({{1, 1}});
  auto p = solve_box_feasibility(a, rv({Rational(3, 2)}));
  REQUIRE(p);
  CHECK(in_box(*p));
  CHECK(multiply(a, *p) == rv({Rational(3, 2)}));
  CHECK_FALSE(solve_box_feasibility(a, rv({3})));
  CHECK_FALSE(solve_box_feasibility(a, rv({-1})));

  // x + y = 1, x - y = 1 forces (1, 0).
  RationalMatrix b = from_rows({{1, 1}, {1, -1}});
  auto q = solve_box_feasibility(b, rv({1, 1}));
  REQUIRE(q);
  CHECK(*q == rv({1, 0}));
  CHECK_FALSE(solve_box_feasibility(b, rv({1, 2})));
}

TEST_CASE("redundant and empty systems") {
  RationalMatrix a = from_rows({{1, 2}, {2, 4}});
  CHECK(solve_box_feasibility(a, rv({1, 2})));
  CHECK_FALSE(solve_box_feasibility(a, rv({1, 3})));
  RationalMatrix none(2, 0, Rational(0));
  CHECK(solve_box_feasibility(none, rv({0, 0})));
  CHECK_FALSE(solve_box_feasibility(none, rv({0, 1})));
}

TEST_CASE("random feasible systems are solved") {
  testing::Rng rng(2);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t rows = 1 + trial % 4, cols = 1 + trial % 7;
    RationalMatrix a(rows, cols, Rational(0));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) a(r, c) = entry(rng);
    RationalVector p = testing::random_probabilities(rng, cols);
    RationalVector b = multiply(a, p);
    auto found = solve_box_feasibility(a, b);
    REQUIRE(found);
    REQUIRE(in_box(*found));
    REQUIRE(multiply(a, *found) == b);
  }
}

TEST_CASE("kernel vectors") {
  RationalMatrix a = from_rows({{1, 1}});
  auto c = kernel_vector(a);
  REQUIRE(c);
  CHECK(multiply(a, *c) == rv({0}));
  CHECK(*c != rv({0, 0}));
  CHECK_FALSE(kernel_vector(from_rows({{1, 0}, {0, 1}})));
  CHECK_FALSE(kernel_vector(from_rows({{1, 1}, {1, -1}, {0, 3}})));
  auto d = kernel_vector(from_rows({{1, 2, 3}, {2, 4, 6}}));
  REQUIRE(d);
  CHECK(multiply(from_rows({{1, 2, 3}, {2, 4, 6}}), *d) == rv({0, 0}));
}

}  // namespace
}  // namespace coxtour
