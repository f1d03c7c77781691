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

#ifndef COXTOUR_SGRAPH_H_
#define COXTOUR_SGRAPH_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxtour/matrix.h"
#include "coxtour/roots.h"

namespace coxtour {

// Polarity follows the convention where a negative edge is a competitive
// game (root e_i - e_j) and a positive edge a cooperative one (e_i + e_j).
// Much of the signed-graph literature uses the opposite words.
enum class EdgeKind { kNegative, kPositive, kHalf, kLoop };

// 0-based. For pair edges `i > j`; for half-edges and loops `j == -1`.
struct Edge {
  EdgeKind kind = EdgeKind::kNegative;
  int i = 0;
  int j = -1;

  bool is_pair() const {
    return kind == EdgeKind::kNegative || kind == EdgeKind::kPositive;
  }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// 1-based textual id: "neg:2-1", "pos:3-1", "half:1", "loop:2".
std::string edge_id(const Edge& e);
Edge parse_edge_id(std::string_view text);

using RootVector = std::vector<int>;
using VertexPair = std::pair<int, int>;

// A Phi-graph: vertices 0..n-1 with negative edges, positive edges,
// half-edges and loops. The constructor orients pairs as (larger, smaller),
// sorts and removes duplicates, but does not reject invalid data; call
// validate() or require_valid() for that. Immutable afterwards.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(RootType type, std::vector<VertexPair> neg = {},
                       std::vector<VertexPair> pos = {},
                       std::vector<int> half = {}, std::vector<int> loops = {});

  const RootType& root_type() const { return type_; }
  int n() const { return type_.n; }

  const std::vector<VertexPair>& neg_edges() const { return neg_; }
  const std::vector<VertexPair>& pos_edges() const { return pos_; }
  const std::vector<int>& half_edges() const { return half_; }
  const std::vector<int>& loops() const { return loops_; }

  // Canonical order: negative pairs (lexicographic), positive pairs,
  // half-edges, loops. Tournaments and incidence columns use this order.
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::optional<std::size_t> edge_index(const Edge& e) const;

  SignedGraph without_half_edges() const;
  SignedGraph with_root_type(RootType type) const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.type_ == b.type_ && a.edges_ == b.edges_;
  }

 private:
  RootType type_;
  std::vector<VertexPair> neg_;
  std::vector<VertexPair> pos_;
  std::vector<int> half_;
  std::vector<int> loops_;
  std::vector<Edge> edges_;
};

// Human-readable list of violated invariants; empty means valid.
std::vector<std::string> validate(const SignedGraph& g);
// Throws kInvalidArgument listing the violations.
void require_valid(const SignedGraph& g);

// Root assigned to an edge: e_i - e_j, e_i + e_j, e_i or 2 e_i.
RootVector gamma(const SignedGraph& g, const Edge& e);

// K_Phi: every pair as both a negative and a positive edge, plus all
// half-edges (B) or all loops (C).
SignedGraph complete_graph(const RootType& t);

// True iff the graph has no loops, no half-edges (unless drop_half_edges),
// and admits a vertex signing with equal signs across negative edges and
// opposite signs across positive edges.
bool is_balanced(const SignedGraph& g, bool drop_half_edges = false);

// n x |E| matrix whose columns are gamma(g, e) in canonical edge order.
IntMatrix incidence_matrix(const SignedGraph& g);

}  // namespace coxtour

#endif  // COXTOUR_SGRAPH_H_
