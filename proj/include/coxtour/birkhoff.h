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

#ifndef COXTOUR_BIRKHOFF_H_
#define COXTOUR_BIRKHOFF_H_

#include <map>
#include <string>
#include <vector>

#include "coxtour/matrix.h"
#include "coxtour/rational.h"
#include "coxtour/roots.h"
#include "coxtour/score.h"

namespace coxtour {

// phi(i) for i = 1..n, stored at images[i - 1]; phi(-i) = -phi(i) is implied.
struct SignedPermutation {
  std::vector<int> images;

  static SignedPermutation identity(int n);
  int n() const { return static_cast<int>(images.size()); }
  bool valid() const;
  // Row i has sign(phi(i)) in column |phi(i)|.
  RationalMatrix matrix() const;
  friend auto operator<=>(const SignedPermutation&,
                          const SignedPermutation&) = default;
};

// One-line notation, e.g. "[2, -1]".
std::string format_permutation(const SignedPermutation& phi);

// Deterministic tournament on complete_graph(t): i beats j in the competitive
// game iff phi(i) > phi(j), the cooperative game is won iff phi(i) + phi(j) > 0,
// and solitaire games (half-edges or loops) are won iff phi(i) > 0.
// Its mean score is matrix() * rho_complete(t).
Tournament vertex_tournament(const SignedPermutation& phi, const RootType& t);

// A with A_ij = sign(x_i) * S_ij, S = transfer_matrix(|x|, rho_complete(t)),
// so A * rho == x. Throws kInfeasible unless x is a mean score on K_t.
RationalMatrix signed_transfer(std::span<const Rational> x, const RootType& t);

// E >= 0 such that b + E is doubly stochastic. Greedy: add the smaller
// deficiency at the first deficient row and first deficient column.
RationalMatrix pad_to_doubly_stochastic(const RationalMatrix& b);

struct DecompositionTerm {
  Rational weight;
  SignedPermutation perm;
};

struct SignedDecomposition {
  std::vector<DecompositionTerm> terms;
  int rounds = 0;  // perfect matchings extracted
};

// Convex combination of signed permutation matrices whose action on rho
// gives x. Matchings through padding cells are emitted twice at half weight,
// once with those cells positive and once negative, so the padding cancels.
SignedDecomposition birkhoff_decompose(std::span<const Rational> x,
                                       const RootType& t);

// "[2, -1] @ 1/4" per line.
std::string format_decomposition(const SignedDecomposition& d);

// Edge-wise mixture of the vertex tournaments.
Tournament mixture_tournament(const SignedDecomposition& d, const RootType& t);

// Measure on {+-1, ..., +-n}; keys are signed 1-based values.
struct FinitelySupportedMeasure {
  std::map<int, Rational> mass;

  Rational total() const;
};

// 1/2 P(X + sign Y > 0) - 1/2 P(X + sign Y < 0) for independent X ~ a, Y ~ b.
// `sign` is +1 or -1. Both must be probability measures.
Rational psi_pair(const FinitelySupportedMeasure& a,
                  const FinitelySupportedMeasure& b, int sign);
// P(X > 0) - P(X < 0).
Rational psi_solo(const FinitelySupportedMeasure& a);

// nu_i(+-j) = E_ij / 2 + S_ij [+-x_i > 0], with S the transfer matrix and E
// its padding. Each nu_i is a probability measure.
std::vector<FinitelySupportedMeasure> strassen_measures(
    std::span<const Rational> x, const RootType& t);

enum class SoloRule {
  // p_i = 1/2 + 1/2 (psi_solo(nu_i) / 2 + psi_pair(nu_i, nu_i, +1)); exact.
  kCorrected,
  // p_i = (psi_solo(nu_i) + 1) / 2; drops the self-interaction term and in
  // general misses x (e.g. C2, x = (1/2, 1)).
  kNaive,
};

// Tournament built from the measures without checking its mean score.
Tournament strassen_tournament(const std::vector<FinitelySupportedMeasure>& nu,
                               const RootType& t, SoloRule rule);

// Type C only. Pair games use psi + 1/2; loops use the corrected rule.
// Throws kInternal if the result misses x.
Tournament strassen_construct(std::span<const Rational> x, const RootType& t);

}  // namespace coxtour

#endif  // COXTOUR_BIRKHOFF_H_
