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

#ifndef COXTOUR_HH_H_
#define COXTOUR_HH_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coxtour/rational.h"
#include "coxtour/roots.h"
#include "coxtour/score.h"

namespace coxtour {

// Slider position solving sum_j l_j(gamma) == target, where
//   l_j(gamma) = len(I_j & [gamma, inf)) + len(I_j & [gamma, 0]),
//   I_j = [a_j - 1, a_j].
// `abs_scores` are the a_j (non-negative). Scans breakpoints from the right
// and returns the first (largest) gamma >= -1 attaining the target, so
// target == 0 gives max_j a_j. Throws kInfeasible when target is outside
// [0, sum_j l_j(-1)].
Rational solve_gamma_star(std::span<const Rational> abs_scores,
                          const Rational& target);

// Total slider length at gamma; exposed for tests.
Rational slider_length(std::span<const Rational> abs_scores, const Rational& gamma);

enum class HhCase {
  kZero,      // extreme score 0: everything left is a coin flip
  kWeak,      // extreme score < 0: values are p (extreme player's win odds)
  kStrong,    // extreme score > 0: values are q = 1 - p
  kBase,      // single player left: `solo` holds p directly
};

// One elimination step for the player with the largest |x| (the last one).
// Opponent vectors are indexed like the input minus the last entry.
struct HhStep {
  HhCase kind = HhCase::kZero;
  Rational gamma_star;            // meaningful for kWeak/kStrong
  std::vector<Rational> neg;      // p_nj^- (or q_nj^- for kStrong)
  std::vector<Rational> pos;      // p_nj^+ (or q_nj^+ for kStrong)
  std::optional<Rational> solo;   // p_n^h / p_n^l (or q), none in type D
  ScoreSequence reduced;          // x' for the remaining players

  // Probabilities from the extreme player's point of view regardless of case.
  Rational win_neg(std::size_t j) const;
  Rational win_pos(std::size_t j) const;
  std::optional<Rational> win_solo() const;
};

// Requires n >= 2, x sorted by |x| ascending and |x| weakly sub-majorized by
// rho_complete(t). Checks that the extreme player's score is met exactly,
// that |x'| stays feasible for rank n-1 and that |x'| is still sorted.
HhStep hh_step(const RootType& t, std::span<const Rational> x);

// Full trace: which original player was eliminated at each step, in which
// order the remaining opponents were listed, and the step data.
struct HhTraceBlock {
  int player = 0;                  // 0-based original index
  Rational score;                  // that player's score when eliminated
  std::vector<int> opponents;      // original indices, same order as step data
  std::vector<Rational> opponent_scores;
  HhStep step;                     // for the last player only `solo` is set
};

struct HhResult {
  Tournament tournament;
  std::vector<HhTraceBlock> trace;
};

// Tournament on complete_graph(t) with mean score exactly x. Ties in |x|
// are broken by original index (larger index is eliminated first).
HhResult hh_construct_traced(const RootType& t, std::span<const Rational> x);
Tournament hh_construct(const RootType& t, std::span<const Rational> x);

// Plain-text rendering of the trace, one block per eliminated player, laid
// out with the eliminated player first and the rest by decreasing |x|.
std::string format_hh_trace(const RootType& t, const std::vector<HhTraceBlock>& trace);

}  // namespace coxtour

#endif  // COXTOUR_HH_H_
