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

#include "coxtour/score.h"

#include <algorithm>
#include <cstdlib>

#include "coxtour/error.h"
#include "coxtour/majorize.h"

namespace coxtour {

Tournament::Tournament(SignedGraph graph, RationalVector probs)
    : graph_(std::move(graph)), probs_(std::move(probs)) {
  require_valid(graph_);
  if (probs_.size() != graph_.edge_count())
    fail(ErrorCode::kInvalidArgument,
         "tournament needs one probability per edge (" +
             std::to_string(graph_.edge_count()) + "), got " +
             std::to_string(probs_.size()));
  for (std::size_t k = 0; k < probs_.size(); ++k)
    if (probs_[k] < 0 || probs_[k] > 1)
      fail(ErrorCode::kInvalidArgument,
           "probability of " + edge_id(graph_.edges()[k]) + " outside [0,1]");
}

Tournament Tournament::uniform(SignedGraph graph, const Rational& p) {
  RationalVector probs(graph.edge_count(), p);
  return Tournament(std::move(graph), std::move(probs));
}

const Rational& Tournament::prob(const Edge& e) const {
  auto k = graph_.edge_index(e);
  if (!k) fail(ErrorCode::kNotFound, "edge " + edge_id(e) + " is not in the graph");
  return probs_[*k];
}

bool Tournament::is_deterministic() const {
  return std::all_of(probs_.begin(), probs_.end(),
                     [](const Rational& p) { return p == 0 || p == 1; });
}

Tournament Tournament::complement() const {
  RationalVector q;
  q.reserve(probs_.size());
  for (const Rational& p : probs_) q.push_back(1 - p);
  return Tournament(graph_, std::move(q));
}

ScoreSequence mean_score(const Tournament& t) {
  const SignedGraph& g = t.graph();
  ScoreSequence x(g.n(), Rational(0));
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edges()[k];
    Rational w = t.probs()[k] - Rational(1, 2);
    switch (e.kind) {
      case EdgeKind::kNegative:
        x[e.i] += w;
        x[e.j] -= w;
        break;
      case EdgeKind::kPositive:
        x[e.i] += w;
        x[e.j] += w;
        break;
      case EdgeKind::kHalf: x[e.i] += w; break;
      case EdgeKind::kLoop: x[e.i] += 2 * w; break;
    }
  }
  return x;
}

namespace {

// |<w, gamma(e)>| for a sign vector w with entries in {-1, 0, 1}.
int edge_weight(const Edge& e, std::span<const int> w) {
  switch (e.kind) {
    case EdgeKind::kNegative: return std::abs(w[e.i] - w[e.j]);
    case EdgeKind::kPositive: return std::abs(w[e.i] + w[e.j]);
    case EdgeKind::kHalf: return std::abs(w[e.i]);
    case EdgeKind::kLoop: return 2 * std::abs(w[e.i]);
  }
  return 0;
}

// Edges grouped by their larger endpoint, so a depth-first scan over
// players can close each edge as soon as both ends carry a sign.
struct ClosingEdges {
  // (other endpoint, coefficient of the other endpoint in gamma)
  std::vector<std::vector<std::pair<int, int>>> pairs;
  std::vector<int> solo;  // |gamma| weight of half-edges and loops at i
};

ClosingEdges closing_edges(const SignedGraph& g) {
  ClosingEdges c{std::vector<std::vector<std::pair<int, int>>>(g.n()),
                 std::vector<int>(g.n(), 0)};
  for (const Edge& e : g.edges()) {
    switch (e.kind) {
      case EdgeKind::kNegative: c.pairs[e.i].emplace_back(e.j, -1); break;
      case EdgeKind::kPositive: c.pairs[e.i].emplace_back(e.j, 1); break;
      case EdgeKind::kHalf: c.solo[e.i] += 1; break;
      case EdgeKind::kLoop: c.solo[e.i] += 2; break;
    }
  }
  return c;
}

// Visits every sign vector s in {-1,0,1}^n and checks
//   2 * sum_i s_i X_i <= D * sum_e |<s, gamma(e)>|
// where X = D x is integral. Num is __int128 or mpz_class.
template <class Num>
class SignedSubsetScan {
 public:
  SignedSubsetScan(const ClosingEdges& edges, std::vector<Num> scaled_x, Num d)
      : edges_(edges), x2_(std::move(scaled_x)), d_(std::move(d)),
        signs_(x2_.size(), 0) {
    for (Num& v : x2_) v *= 2;
  }

  bool all_hold() { return visit(0, Num(0)); }
  // After all_hold() returns false: the violating sign vector.
  const std::vector<int>& signs() const { return signs_; }

 private:
  bool visit(std::size_t i, const Num& acc) {
    if (i == x2_.size()) return acc <= 0;
    for (int s : {0, 1, -1}) {
      signs_[i] = s;
      int closed = s == 0 ? 0 : edges_.solo[i];
      for (auto [j, coef] : edges_.pairs[i])
        closed += std::abs(s + coef * signs_[j]);
      Num next = acc;
      if (s == 1) next += x2_[i];
      if (s == -1) next -= x2_[i];
      if (closed != 0) next -= d_ * Num(closed);
      if (!visit(i + 1, next)) return false;
    }
    signs_[i] = 0;
    return true;
  }

  const ClosingEdges& edges_;
  std::vector<Num> x2_;
  Num d_;
  std::vector<int> signs_;
};

}  // namespace

Rational h_value(const SignedGraph& g, const AdmissibleSubset& s) {
  require_valid(g);
  require_bcd(g.root_type(), "h_value");
  if (!s.valid(g.n()))
    fail(ErrorCode::kInvalidArgument, "subset is not admissible");
  std::vector<int> w(g.n(), 0);
  for (int i : s.plus) w[i] = 1;
  for (int i : s.minus) w[i] = -1;
  long twice = 0;
  for (const Edge& e : g.edges()) twice += edge_weight(e, w);
  return Rational(twice) / 2;
}

Rational h_value_reduced(const SignedGraph& g, std::span<const int> subset) {
  require_valid(g);
  require_bcd(g.root_type(), "h_value_reduced");
  std::vector<char> in(g.n(), 0);
  for (int i : subset) {
    if (i < 0 || i >= g.n()) fail(ErrorCode::kInvalidArgument, "subset index outside [n]");
    in[i] = 1;
  }
  Rational h = 0;
  for (const Edge& e : g.edges()) {
    switch (e.kind) {
      case EdgeKind::kNegative:
        if (in[e.i] + in[e.j] == 1) h += Rational(1, 2);
        break;
      case EdgeKind::kPositive:
        if (in[e.i] + in[e.j] == 1) h += Rational(1, 2);
        if (in[e.i] + in[e.j] == 2) h += 1;
        break;
      case EdgeKind::kHalf:
        if (in[e.i]) h += Rational(1, 2);
        break;
      case EdgeKind::kLoop:
        if (in[e.i]) h += 1;
        break;
    }
  }
  return h;
}

std::optional<AdmissibleSubset> violated_subset(const SignedGraph& g,
                                               std::span<const Rational> x,
                                               const MembershipOptions& options) {
  require_valid(g);
  require_bcd(g.root_type(), "membership test");
  if (static_cast<int>(x.size()) != g.n())
    fail(ErrorCode::kInvalidArgument, "score length differs from vertex count");
  if (g.n() > options.max_n)
    fail(ErrorCode::kBudget, "membership test capped at n = " +
                                 std::to_string(options.max_n));

  mpz_class d = 1;
  for (const Rational& q : x) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> scaled;
  scaled.reserve(x.size());
  bool small = mpz_sizeinbase(d.get_mpz_t(), 2) < 48;
  for (const Rational& q : x) {
    scaled.push_back(q.get_num() * (d / q.get_den()));
    small = small && mpz_sizeinbase(scaled.back().get_mpz_t(), 2) < 48;
  }

  ClosingEdges edges = closing_edges(g);
  auto report = [](const auto& scan) {
    AdmissibleSubset s;
    for (int i = 0; i < static_cast<int>(scan.signs().size()); ++i) {
      if (scan.signs()[i] > 0) s.plus.push_back(i);
      if (scan.signs()[i] < 0) s.minus.push_back(i);
    }
    return s;
  };
  if (small) {
    std::vector<__int128> fast;
    fast.reserve(scaled.size());
    for (const mpz_class& v : scaled) fast.push_back(v.get_si());
    SignedSubsetScan<__int128> scan(edges, std::move(fast), d.get_si());
    if (scan.all_hold()) return std::nullopt;
    return report(scan);
  }
  SignedSubsetScan<mpz_class> scan(edges, std::move(scaled), d);
  if (scan.all_hold()) return std::nullopt;
  return report(scan);
}

bool is_mean_score(const SignedGraph& g, std::span<const Rational> x,
                   const MembershipOptions& options) {
  return !violated_subset(g, x, options).has_value();
}

bool is_mean_score_complete(const RootType& t, std::span<const Rational> x) {
  require_bcd(t, "is_mean_score_complete");
  if (static_cast<int>(x.size()) != t.n)
    fail(ErrorCode::kInvalidArgument, "score length differs from rank");
  return weak_submajorizes(abs(x), rho_complete(t));
}

RationalVector translation_vector(const SignedGraph& g) {
  require_valid(g);
  RationalVector rho(g.n(), Rational(0));
  for (const Edge& e : g.edges()) {
    RootVector r = gamma(g, e);
    for (int i = 0; i < g.n(); ++i) rho[i] += Rational(std::abs(r[i])) / 2;
  }
  return rho;
}

bool is_translated_lattice_point(const SignedGraph& g, std::span<const int> tvec,
                                 const MembershipOptions& options) {
  if (static_cast<int>(tvec.size()) != g.n())
    fail(ErrorCode::kInvalidArgument, "target length differs from vertex count");
  RationalVector rho = translation_vector(g);
  RationalVector x(g.n());
  for (int i = 0; i < g.n(); ++i) x[i] = Rational(tvec[i]) - rho[i];
  return is_mean_score(g, x, options);
}

}  // namespace coxtour
