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

#ifndef COXTOUR_LANDAU_H_
#define COXTOUR_LANDAU_H_

#include <span>
#include <vector>

#include "coxtour/matrix.h"
#include "coxtour/oracle.h"
#include "coxtour/score.h"
#include "coxtour/sgraph.h"

namespace coxtour {

// A point of Z^n compared against mean scores shifted by translation_vector(g).
using IntegerTarget = std::vector<int>;

// Deterministic tournament whose mean score s has s + translation_vector(g)
// == t. Needs g without half-edges to be balanced (kPrecondition otherwise)
// and t in the shifted zonotope (kInfeasible otherwise). Solves the box LP
// exactly and then rounds along dependencies of the fractional columns,
// which total unimodularity guarantees exist.
Tournament realize_deterministic(const SignedGraph& g, std::span<const int> t);

// Moves a point p of [0,1]^m along dependencies of its fractional columns
// until every coordinate is 0 or 1, keeping a * p fixed. Each move pins at
// least one more coordinate. Throws kInternal if the fractional columns
// become independent, which cannot happen for a totally unimodular a with
// integral a * p.
RationalVector round_to_integral(const RationalMatrix& a, RationalVector p);

// Number of dependency moves used by the most recent rounding on this
// thread; exposed for tests.
int last_rounding_steps();

// Every integer point of the shifted zonotope, in lexicographic order.
// Limited to n <= 4 and |E| <= 8 (kBudget).
std::vector<IntegerTarget> zonotope_lattice_points(const SignedGraph& g);

// Shifted scores of deterministic tournaments, in lexicographic order.
std::vector<IntegerTarget> deterministic_targets(const SignedGraph& g,
                                                 const OracleBudget& budget = {});

// Integer points of the shifted zonotope that no deterministic tournament
// reaches. Same limits as zonotope_lattice_points.
std::vector<IntegerTarget> random_only_points(const SignedGraph& g);

}  // namespace coxtour

#endif  // COXTOUR_LANDAU_H_
