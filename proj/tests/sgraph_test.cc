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

#include "coxtour/sgraph.h"

#include <algorithm>

#include "doctest.h"
#include "test_support.h"

namespace coxtour {
namespace {

using testing::all_graphs;

const RootType kD2 = RootType::make(RootKind::D, 2);
const RootType kD3 = RootType::make(RootKind::D, 3);

SignedGraph digon() { return SignedGraph(kD2, {{1, 0}}, {{1, 0}}); }

long det(std::vector<std::vector<int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<int>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return total;
}

bool totally_unimodular(const IntMatrix& a) {
  const int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
  for (int rmask = 1; rmask < (1 << rows); ++rmask)
    for (int cmask = 1; cmask < (1 << cols); ++cmask) {
      if (std::popcount(static_cast<unsigned>(rmask)) !=
          std::popcount(static_cast<unsigned>(cmask)))
        continue;
      std::vector<std::vector<int>> m;
      for (int r = 0; r < rows; ++r) {
        if (!(rmask >> r & 1)) continue;
        std::vector<int> row;
        for (int c = 0; c < cols; ++c)
          if (cmask >> c & 1) row.push_back(a(r, c));
        m.push_back(row);
      }
      if (std::abs(det(m)) > 1) return false;
    }
  return true;
}

// Flip cooperative and competitive games at vertex v.
SignedGraph switch_at(const SignedGraph& g, int v) {
  std::vector<VertexPair> neg, pos;
  for (auto e : g.neg_edges()) (e.first == v || e.second == v ? pos : neg).push_back(e);
  for (auto e : g.pos_edges()) (e.first == v || e.second == v ? neg : pos).push_back(e);
  return SignedGraph(g.root_type(), neg, pos, g.half_edges(), g.loops());
}

TEST_CASE("validate reports broken invariants") {
  SignedGraph looped(kD2, {}, {}, {}, {0});
  auto v = validate(looped);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == "loops forbidden in D");
  CHECK(validate(SignedGraph(RootType::make(RootKind::C, 3))).empty());
  CHECK(validate(SignedGraph(RootType::make(RootKind::B, 1), {}, {}, {0})).empty());
  CHECK_FALSE(validate(SignedGraph(RootType::make(RootKind::C, 2), {}, {}, {0})).empty());
  CHECK_FALSE(validate(SignedGraph(RootType::make(RootKind::A, 3), {}, {{1, 0}})).empty());
  CHECK_FALSE(validate(SignedGraph(kD2, {{2, 0}})).empty());
  CHECK_FALSE(validate(SignedGraph(kD2, {{1, 1}})).empty());
  CHECK_ERROR_CODE(require_valid(looped), ErrorCode::kInvalidArgument);
}

TEST_CASE("gamma maps edges to roots") {
  SignedGraph g(RootType::make(RootKind::C, 3), {{1, 0}}, {{2, 0}}, {}, {1});
  CHECK(gamma(g, {EdgeKind::kNegative, 1, 0}) == RootVector{-1, 1, 0});
  CHECK(gamma(g, {EdgeKind::kPositive, 2, 0}) == RootVector{1, 0, 1});
  CHECK(gamma(g, {EdgeKind::kLoop, 1, -1}) == RootVector{0, 2, 0});
  CHECK_ERROR_CODE(gamma(g, {EdgeKind::kNegative, 2, 1}), ErrorCode::kNotFound);
  SignedGraph b(RootType::make(RootKind::B, 2), {}, {}, {1});
  CHECK(gamma(b, {EdgeKind::kHalf, 1, -1}) == RootVector{0, 1});
}

TEST_CASE("pairs are normalized to i > j") {
  SignedGraph g(kD3, {{0, 2}, {2, 0}, {1, 0}});
  CHECK(g.neg_edges() == std::vector<VertexPair>{{1, 0}, {2, 0}});
  CHECK(g.edge_count() == 2);
}

TEST_CASE("complete graphs") {
  SignedGraph c2 = complete_graph(RootType::make(RootKind::C, 2));
  CHECK(c2.neg_edges() == std::vector<VertexPair>{{1, 0}});
  CHECK(c2.pos_edges() == std::vector<VertexPair>{{1, 0}});
  CHECK(c2.loops() == std::vector<int>{0, 1});
  CHECK(c2.half_edges().empty());
  SignedGraph d2 = complete_graph(kD2);
  CHECK(d2.edge_count() == 2);
  CHECK(d2.loops().empty());
  SignedGraph b1 = complete_graph(RootType::make(RootKind::B, 1));
  CHECK(b1.edge_count() == 1);
  CHECK(b1.half_edges() == std::vector<int>{0});
  CHECK_ERROR_CODE(complete_graph(RootType::make(RootKind::A, 3)), ErrorCode::kUnsupportedType);
  CHECK(complete_graph(RootType::make(RootKind::B, 5)).edge_count() == 25);
}

TEST_CASE("balance") {
  CHECK_FALSE(is_balanced(digon()));
  CHECK(is_balanced(SignedGraph(kD3, {{1, 0}, {2, 1}})));
  CHECK_FALSE(is_balanced(SignedGraph(RootType::make(RootKind::C, 1), {}, {}, {}, {0})));
  // One cooperative edge on a triangle is an odd cycle; two are even.
  CHECK_FALSE(is_balanced(SignedGraph(kD3, {{1, 0}, {2, 0}}, {{2, 1}})));
  CHECK(is_balanced(SignedGraph(kD3, {{1, 0}}, {{2, 0}, {2, 1}})));
  SignedGraph half(RootType::make(RootKind::B, 2), {{1, 0}}, {}, {0});
  CHECK_FALSE(is_balanced(half));
  CHECK(is_balanced(half, /*drop_half_edges=*/true));
}

TEST_CASE("balance is invariant under switching") {
  for (int n = 2; n <= 4; ++n)
    for (const SignedGraph& g : all_graphs(RootType::make(RootKind::D, n), 6))
      for (int v = 0; v < n; ++v) CHECK(is_balanced(g) == is_balanced(switch_at(g, v)));
}

TEST_CASE("balanced graphs have totally unimodular incidence matrices") {
  int balanced = 0, unbalanced = 0;
  for (int n = 1; n <= 4; ++n)
    for (const SignedGraph& g : all_graphs(RootType::make(RootKind::D, n), 6)) {
      const bool tu = totally_unimodular(incidence_matrix(g));
      CHECK(is_balanced(g) == tu);
      ++(is_balanced(g) ? balanced : unbalanced);
    }
  for (int n = 1; n <= 3; ++n)
    for (const SignedGraph& g : all_graphs(RootType::make(RootKind::B, n), 9))
      if (is_balanced(g, true)) CHECK(totally_unimodular(incidence_matrix(g)));
  CHECK(balanced > 100);
  CHECK(unbalanced > 100);
}

TEST_CASE("incidence matrix columns follow the canonical order") {
  IntMatrix one = incidence_matrix(SignedGraph(kD2, {{1, 0}}));
  CHECK(one.rows() == 2);
  CHECK(one.cols() == 1);
  CHECK(one(0, 0) == -1);
  CHECK(one(1, 0) == 1);
  CHECK(incidence_matrix(SignedGraph(kD3)).cols() == 0);
  IntMatrix half = incidence_matrix(SignedGraph(RootType::make(RootKind::B, 1), {}, {}, {0}));
  CHECK(half(0, 0) == 1);
  SignedGraph c2 = complete_graph(RootType::make(RootKind::C, 2));
  IntMatrix m = incidence_matrix(c2);
  for (std::size_t c = 0; c < c2.edge_count(); ++c) {
    RootVector r = gamma(c2, c2.edges()[c]);
    for (int i = 0; i < 2; ++i) CHECK(m(i, c) == r[i]);
  }
}

TEST_CASE("edge ids round trip") {
  SignedGraph c3 = complete_graph(RootType::make(RootKind::C, 3));
  for (const Edge& e : c3.edges()) CHECK(parse_edge_id(edge_id(e)) == e);
  CHECK(edge_id({EdgeKind::kNegative, 1, 0}) == "neg:2-1");
  CHECK(parse_edge_id("pos:1-3") == Edge{EdgeKind::kPositive, 2, 0});
  CHECK_ERROR_CODE(parse_edge_id("neg:0-1"), ErrorCode::kParse);
  CHECK_ERROR_CODE(parse_edge_id("what"), ErrorCode::kParse);
}

}  // namespace
}  // namespace coxtour
