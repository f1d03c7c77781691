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

#ifndef COXTOUR_ORACLE_H_
#define COXTOUR_ORACLE_H_

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "coxtour/rational.h"
#include "coxtour/score.h"
#include "coxtour/sgraph.h"

namespace coxtour {

// Brute-force limits; exceeding either throws kBudget.
struct OracleBudget {
  int max_edges = 20;
  int max_n = 6;
};

// Mean scores of all 2^|E| deterministic tournaments on g.
std::set<ScoreSequence> enumerate_deterministic_scores(const SignedGraph& g,
                                                       const OracleBudget& budget = {});

// Some deterministic tournament on g with mean score x, searched exhaustively.
std::optional<Tournament> find_deterministic(const SignedGraph& g,
                                             std::span<const Rational> x,
                                             const OracleBudget& budget = {});

// Whether sum_e (p_e - 1/2) Gamma(e) == x for some p in [0,1]^E, decided by
// exact linear programming.
bool lp_member(const SignedGraph& g, std::span<const Rational> x,
               const OracleBudget& budget = {});

// Whether x is a convex combination of the given points (exact LP).
bool hull_member(const std::vector<ScoreSequence>& points,
                 std::span<const Rational> x);

}  // namespace coxtour

#endif  // COXTOUR_ORACLE_H_
