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

#ifndef COXTOUR_SCORE_H_
#define COXTOUR_SCORE_H_

#include <optional>
#include <span>
#include <vector>

#include "coxtour/rational.h"
#include "coxtour/roots.h"
#include "coxtour/sgraph.h"

namespace coxtour {

using ScoreSequence = RationalVector;

// A random Coxeter tournament: one probability per edge of the graph, in the
// graph's canonical edge order.
//   negative edge (i, j), i > j: probability that i beats j
//   positive edge:                probability that the pair wins together
//   half-edge / loop:             probability that the player wins alone
class Tournament {
 public:
  Tournament() = default;
  // Throws kInvalidArgument unless the graph is valid and there is exactly
  // one probability in [0, 1] per edge.
  Tournament(SignedGraph graph, RationalVector probs);

  static Tournament uniform(SignedGraph graph, const Rational& p = Rational(1, 2));

  const SignedGraph& graph() const { return graph_; }
  const RationalVector& probs() const { return probs_; }
  const Rational& prob(const Edge& e) const;

  bool is_deterministic() const;
  // Every probability p replaced by 1 - p.
  Tournament complement() const;

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  SignedGraph graph_;
  RationalVector probs_;
};

// x = sum_e (p_e - 1/2) gamma(e).
ScoreSequence mean_score(const Tournament& t);

// Support function of the zonotope Z_G at the signed indicator vector of s:
// sum_e |<w_s, gamma(e)>| / 2. Types B, C, D.
Rational h_value(const SignedGraph& g, const AdmissibleSubset& s);

// The sign-free bound E1-(s)/2 + E1+(s)/2 + E2+(s) + H(s)/2 + L(s).
// Equals h_value for every sign pattern on complete graphs; on other graphs
// it can undercount (e.g. a lone negative edge with s = {both endpoints}).
Rational h_value_reduced(const SignedGraph& g, std::span<const int> subset);

struct MembershipOptions {
  int max_n = 16;  // the test visits 3^n signed subsets
};

// A signed subset whose inequality x fails, or nullopt if x is a mean score.
std::optional<AdmissibleSubset> violated_subset(const SignedGraph& g,
                                               std::span<const Rational> x,
                                               const MembershipOptions& options = {});

// x in Z_G, decided by <w_s, x> <= h_value(g, s) over every admissible
// signed subset s. Exact. Types B, C, D.
bool is_mean_score(const SignedGraph& g, std::span<const Rational> x,
                   const MembershipOptions& options = {});

// Complete-graph shortcut: |x| weakly sub-majorized by rho_complete(t).
bool is_mean_score_complete(const RootType& t, std::span<const Rational> x);

// rho_G = sum_e |gamma(e)| / 2, the translation taking mean scores to
// "games won" counts. Lattice points of Z_G + rho_G are what deterministic
// tournaments can hit.
RationalVector translation_vector(const SignedGraph& g);

// tvec - rho_G lies in Z_G.
bool is_translated_lattice_point(const SignedGraph& g, std::span<const int> tvec,
                                 const MembershipOptions& options = {});

}  // namespace coxtour

#endif  // COXTOUR_SCORE_H_
