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
#include <charconv>
#include <queue>
#include <sstream>

#include "coxtour/error.h"

namespace coxtour {
namespace {

void normalize_pairs(std::vector<VertexPair>& pairs) {
  for (auto& [a, b] : pairs)
    if (a < b) std::swap(a, b);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

void normalize_vertices(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

int parse_index(std::string_view s, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 1)
    fail(ErrorCode::kParse, "bad edge id '" + std::string(whole) + "'");
  return value - 1;
}

}  // namespace

std::string edge_id(const Edge& e) {
  switch (e.kind) {
    case EdgeKind::kNegative:
      return "neg:" + std::to_string(e.i + 1) + "-" + std::to_string(e.j + 1);
    case EdgeKind::kPositive:
      return "pos:" + std::to_string(e.i + 1) + "-" + std::to_string(e.j + 1);
    case EdgeKind::kHalf: return "half:" + std::to_string(e.i + 1);
    case EdgeKind::kLoop: return "loop:" + std::to_string(e.i + 1);
  }
  return "?";
}

Edge parse_edge_id(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    fail(ErrorCode::kParse, "bad edge id '" + std::string(text) + "'");
  std::string_view tag = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  if (tag == "neg" || tag == "pos") {
    auto dash = rest.find('-');
    if (dash == std::string_view::npos)
      fail(ErrorCode::kParse, "bad edge id '" + std::string(text) + "'");
    int a = parse_index(rest.substr(0, dash), text);
    int b = parse_index(rest.substr(dash + 1), text);
    if (a < b) std::swap(a, b);
    return Edge{tag == "neg" ? EdgeKind::kNegative : EdgeKind::kPositive, a, b};
  }
  if (tag == "half") return Edge{EdgeKind::kHalf, parse_index(rest, text), -1};
  if (tag == "loop") return Edge{EdgeKind::kLoop, parse_index(rest, text), -1};
  fail(ErrorCode::kParse, "bad edge id '" + std::string(text) + "'");
}

SignedGraph::SignedGraph(RootType type, std::vector<VertexPair> neg,
                         std::vector<VertexPair> pos, std::vector<int> half,
                         std::vector<int> loops)
    : type_(type),
      neg_(std::move(neg)),
      pos_(std::move(pos)),
      half_(std::move(half)),
      loops_(std::move(loops)) {
  normalize_pairs(neg_);
  normalize_pairs(pos_);
  normalize_vertices(half_);
  normalize_vertices(loops_);
  edges_.reserve(neg_.size() + pos_.size() + half_.size() + loops_.size());
  for (auto [a, b] : neg_) edges_.push_back({EdgeKind::kNegative, a, b});
  for (auto [a, b] : pos_) edges_.push_back({EdgeKind::kPositive, a, b});
  for (int v : half_) edges_.push_back({EdgeKind::kHalf, v, -1});
  for (int v : loops_) edges_.push_back({EdgeKind::kLoop, v, -1});
}

std::optional<std::size_t> SignedGraph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& a, const Edge& b) {
                               if (a.kind != b.kind) return a.kind < b.kind;
                               return std::pair(a.i, a.j) < std::pair(b.i, b.j);
                             });
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

SignedGraph SignedGraph::without_half_edges() const {
  return SignedGraph(type_, neg_, pos_, {}, loops_);
}

SignedGraph SignedGraph::with_root_type(RootType type) const {
  return SignedGraph(type, neg_, pos_, half_, loops_);
}

std::vector<std::string> validate(const SignedGraph& g) {
  std::vector<std::string> out;
  const RootType& t = g.root_type();
  const std::string kind = to_string(t.kind);
  if (t.n < 1 || (t.kind == RootKind::A && t.n < 2))
    out.push_back("invalid rank " + std::to_string(t.n) + " for type " + kind);

  if (!g.loops().empty() && t.kind != RootKind::C)
    out.push_back("loops forbidden in " + kind);
  if (!g.half_edges().empty() && t.kind != RootKind::B)
    out.push_back("half-edges forbidden in " + kind);
  if (!g.pos_edges().empty() && t.kind == RootKind::A)
    out.push_back("positive edges forbidden in A");

  auto in_range = [&](int v) { return v >= 0 && v < t.n; };
  auto check_pairs = [&](const std::vector<VertexPair>& pairs,
                         const char* label) {
    for (auto [a, b] : pairs) {
      if (a == b)
        out.push_back(std::string(label) + " edge {" + std::to_string(a + 1) +
                      "," + std::to_string(b + 1) + "} is not a pair");
      if (!in_range(a) || !in_range(b))
        out.push_back(std::string(label) + " edge {" + std::to_string(a + 1) +
                      "," + std::to_string(b + 1) + "} has endpoint outside [n]");
    }
  };
  check_pairs(g.neg_edges(), "negative");
  check_pairs(g.pos_edges(), "positive");
  for (int v : g.half_edges())
    if (!in_range(v))
      out.push_back("half-edge " + std::to_string(v + 1) + " outside [n]");
  for (int v : g.loops())
    if (!in_range(v))
      out.push_back("loop " + std::to_string(v + 1) + " outside [n]");
  return out;
}

void require_valid(const SignedGraph& g) {
  auto violations = validate(g);
  if (violations.empty()) return;
  std::ostringstream os;
  os << "invalid signed graph:";
  for (const auto& v : violations) os << " " << v << ";";
  fail(ErrorCode::kInvalidArgument, os.str());
}

RootVector gamma(const SignedGraph& g, const Edge& e) {
  if (!g.edge_index(e))
    fail(ErrorCode::kNotFound, "edge " + edge_id(e) + " is not in the graph");
  RootVector r(g.n(), 0);
  switch (e.kind) {
    case EdgeKind::kNegative:
      r[e.i] = 1;
      r[e.j] = -1;
      break;
    case EdgeKind::kPositive:
      r[e.i] = 1;
      r[e.j] = 1;
      break;
    case EdgeKind::kHalf: r[e.i] = 1; break;
    case EdgeKind::kLoop: r[e.i] = 2; break;
  }
  return r;
}

SignedGraph complete_graph(const RootType& t) {
  if (t.kind == RootKind::A)
    fail(ErrorCode::kUnsupportedType,
         "complete Phi-graphs are defined for types B, C and D only");
  std::vector<VertexPair> pairs;
  for (int a = 1; a < t.n; ++a)
    for (int b = 0; b < a; ++b) pairs.emplace_back(a, b);
  std::vector<int> all(t.n);
  for (int v = 0; v < t.n; ++v) all[v] = v;
  return SignedGraph(t, pairs, pairs,
                     t.kind == RootKind::B ? all : std::vector<int>{},
                     t.kind == RootKind::C ? all : std::vector<int>{});
}

bool is_balanced(const SignedGraph& g, bool drop_half_edges) {
  require_valid(g);
  if (!g.loops().empty()) return false;
  if (!drop_half_edges && !g.half_edges().empty()) return false;

  // Neighbour list with the required relation: +1 same sign, -1 opposite.
  std::vector<std::vector<std::pair<int, int>>> adj(g.n());
  for (auto [a, b] : g.neg_edges()) {
    adj[a].emplace_back(b, 1);
    adj[b].emplace_back(a, 1);
  }
  for (auto [a, b] : g.pos_edges()) {
    adj[a].emplace_back(b, -1);
    adj[b].emplace_back(a, -1);
  }

  std::vector<int> sigma(g.n(), 0);
  for (int root = 0; root < g.n(); ++root) {
    if (sigma[root] != 0) continue;
    sigma[root] = 1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (auto [w, rel] : adj[v]) {
        int want = sigma[v] * rel;
        if (sigma[w] == 0) {
          sigma[w] = want;
          queue.push(w);
        } else if (sigma[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

IntMatrix incidence_matrix(const SignedGraph& g) {
  require_valid(g);
  IntMatrix m(g.n(), g.edge_count(), 0);
  for (std::size_t c = 0; c < g.edge_count(); ++c) {
    RootVector col = gamma(g, g.edges()[c]);
    for (int r = 0; r < g.n(); ++r) m(r, c) = col[r];
  }
  return m;
}

}  // namespace coxtour
