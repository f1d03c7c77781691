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

#include "coxtour/hh.h"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

#include "coxtour/error.h"
#include "coxtour/majorize.h"

namespace coxtour {
namespace {

Rational positive_part(const Rational& q) { return q > 0 ? q : Rational(0); }

// len([a - 1, a] & [gamma, inf))
Rational right_length(const Rational& a, const Rational& gamma) {
  return positive_part(a - std::max<Rational>(a - 1, gamma));
}

// len([a - 1, a] & [gamma, 0])
Rational left_length(const Rational& a, const Rational& gamma) {
  return positive_part(std::min<Rational>(a, Rational(0)) -
                       std::max<Rational>(a - 1, gamma));
}

bool sorted_by_abs(std::span<const Rational> x) {
  for (std::size_t k = 1; k < x.size(); ++k)
    if (abs(x[k - 1]) > abs(x[k])) return false;
  return true;
}

void require_feasible(const RootType& t, std::span<const Rational> x) {
  RationalVector ax = abs(x);
  RationalVector rho = rho_complete(t);
  if (auto k = first_weak_violation(ax, rho)) {
    std::sort(ax.begin(), ax.end(), std::greater<>());
    Rational lhs = std::accumulate(ax.begin(), ax.begin() + *k, Rational(0));
    Rational rhs = 0;
    for (int i = 0; i < *k; ++i) rhs += rho[t.n - 1 - i];
    fail(ErrorCode::kInfeasible,
         "not a mean score sequence on K_" + to_string(t) + ": the " +
             std::to_string(*k) + " largest |x_i| sum to " + format_decimal(lhs) +
             " > " + format_decimal(rhs));
  }
}

}  // namespace

Rational slider_length(std::span<const Rational> abs_scores,
                       const Rational& gamma) {
  Rational total = 0;
  for (const Rational& a : abs_scores)
    total += right_length(a, gamma) + left_length(a, gamma);
  return total;
}

Rational solve_gamma_star(std::span<const Rational> abs_scores,
                          const Rational& target) {
  for (const Rational& a : abs_scores)
    if (a < 0) fail(ErrorCode::kInvalidArgument, "slider positions must be >= 0");
  const Rational floor_value = slider_length(abs_scores, Rational(-1));
  if (target < 0 || target > floor_value)
    fail(ErrorCode::kInfeasible,
         "slider target " + format_decimal(target) + " outside [0, " +
             format_decimal(floor_value) + "]");

  std::set<Rational, std::greater<>> points{Rational(0), Rational(-1)};
  for (const Rational& a : abs_scores) {
    points.insert(a);
    if (a - 1 > -1) points.insert(Rational(a - 1));
  }
  std::vector<Rational> breaks(points.begin(), points.end());

  Rational hi = breaks.front();
  Rational hi_value = slider_length(abs_scores, hi);
  if (hi_value >= target) return hi;
  for (std::size_t k = 1; k < breaks.size(); ++k) {
    const Rational& lo = breaks[k];
    Rational lo_value = slider_length(abs_scores, lo);
    if (lo_value >= target)
      return hi - (target - hi_value) * (hi - lo) / (lo_value - hi_value);
    hi = lo;
    hi_value = lo_value;
  }
  fail(ErrorCode::kInternal, "slider scan ran past -1");
}

Rational HhStep::win_neg(std::size_t j) const {
  return kind == HhCase::kStrong ? Rational(1 - neg[j]) : neg[j];
}

Rational HhStep::win_pos(std::size_t j) const {
  return kind == HhCase::kStrong ? Rational(1 - pos[j]) : pos[j];
}

std::optional<Rational> HhStep::win_solo() const {
  if (!solo) return std::nullopt;
  return kind == HhCase::kStrong ? Rational(1 - *solo) : *solo;
}

HhStep hh_step(const RootType& t, std::span<const Rational> x) {
  require_bcd(t, "hh_step");
  const int n = static_cast<int>(x.size());
  if (n < 2 || n != t.n)
    fail(ErrorCode::kInvalidArgument, "hh_step needs n >= 2 scores matching the rank");
  if (!sorted_by_abs(x))
    fail(ErrorCode::kInvalidArgument, "hh_step needs scores sorted by |x|");
  require_feasible(t, x);

  const Rational& extreme = x[n - 1];
  const bool has_solo = t.kind != RootKind::D;
  HhStep step;
  step.reduced.assign(x.begin(), x.end() - 1);

  if (extreme == 0) {
    step.kind = HhCase::kZero;
    step.neg.assign(n - 1, Rational(1, 2));
    step.pos.assign(n - 1, Rational(1, 2));
    if (has_solo) step.solo = Rational(1, 2);
  } else {
    step.kind = extreme < 0 ? HhCase::kWeak : HhCase::kStrong;
    RationalVector a = abs(std::span(x.begin(), x.end() - 1));
    Rational target = Rational(n - 1) + delta_of(t) - abs(extreme);
    step.gamma_star = solve_gamma_star(a, target);
    step.neg.resize(n - 1);
    step.pos.resize(n - 1);
    for (int j = 0; j < n - 1; ++j) {
      Rational right = right_length(a[j], step.gamma_star);
      Rational left = left_length(a[j], step.gamma_star);
      // A weak player competes with weak opponents and cooperates with strong
      // ones; a strong player (complemented values) does the reverse.
      // Zero scores take the "opponent >= 0" branch.
      bool opponent_weak = x[j] < 0;
      bool compete_first = (step.kind == HhCase::kWeak) == opponent_weak;
      step.neg[j] = compete_first ? right : left;
      step.pos[j] = compete_first ? left : right;
      if (step.kind == HhCase::kWeak)
        step.reduced[j] = x[j] + step.neg[j] - step.pos[j];
      else
        step.reduced[j] = x[j] - step.neg[j] + step.pos[j];
    }
    if (has_solo) step.solo = Rational(0);
  }

  // The extreme player's own games must add up to its score.
  Rational achieved = 0;
  for (int j = 0; j < n - 1; ++j)
    achieved += step.win_neg(j) + step.win_pos(j) - 1;
  if (auto s = step.win_solo())
    achieved += (t.kind == RootKind::C ? 2 : 1) * (*s - Rational(1, 2));
  if (achieved != extreme)
    fail(ErrorCode::kInternal, "extreme player's games sum to " +
                                   format_decimal(achieved) + ", expected " +
                                   format_decimal(extreme));
  if (!sorted_by_abs(step.reduced))
    fail(ErrorCode::kInternal, "step did not preserve the |x| order: " +
                                   format_vector(step.reduced));
  if (!weak_submajorizes(abs(step.reduced), rho_complete(RootType{t.kind, n - 1})))
    fail(ErrorCode::kInternal, "reduced scores infeasible: " +
                                   format_vector(step.reduced));
  return step;
}

HhResult hh_construct_traced(const RootType& t, std::span<const Rational> x) {
  require_bcd(t, "hh_construct");
  if (static_cast<int>(x.size()) != t.n)
    fail(ErrorCode::kInvalidArgument, "score length differs from rank");
  require_feasible(t, x);

  SignedGraph g = complete_graph(t);
  RationalVector probs(g.edge_count(), Rational(1, 2));
  auto set_prob = [&](const Edge& e, const Rational& p) {
    probs[*g.edge_index(e)] = p;
  };
  auto set_solo = [&](int player, const Rational& p) {
    if (t.kind == RootKind::B) set_prob({EdgeKind::kHalf, player, -1}, p);
    if (t.kind == RootKind::C) set_prob({EdgeKind::kLoop, player, -1}, p);
  };

  RationalVector current(x.begin(), x.end());
  std::vector<int> alive(t.n);
  std::iota(alive.begin(), alive.end(), 0);
  auto by_abs = [&](int a, int b) {
    Rational aa = abs(current[a]), ab = abs(current[b]);
    return aa != ab ? aa < ab : a < b;
  };
  std::sort(alive.begin(), alive.end(), by_abs);

  HhResult result;
  while (alive.size() >= 2) {
    const int m = static_cast<int>(alive.size());
    RationalVector xs;
    xs.reserve(m);
    for (int p : alive) xs.push_back(current[p]);

    HhTraceBlock block;
    block.player = alive.back();
    block.score = xs.back();
    block.step = hh_step(RootType{t.kind, m}, xs);
    const HhStep& step = block.step;
    for (int j = 0; j < m - 1; ++j) {
      const int e = block.player, b = alive[j];
      Rational win = step.win_neg(j);
      set_prob({EdgeKind::kNegative, std::max(e, b), std::min(e, b)},
               e > b ? win : Rational(1 - win));
      set_prob({EdgeKind::kPositive, std::max(e, b), std::min(e, b)},
               step.win_pos(j));
      block.opponents.push_back(b);
      block.opponent_scores.push_back(xs[j]);
      current[b] = step.reduced[j];
    }
    if (auto s = step.win_solo()) set_solo(block.player, *s);
    result.trace.push_back(std::move(block));

    alive.pop_back();
    std::sort(alive.begin(), alive.end(), by_abs);
  }

  const int last = alive.front();
  HhTraceBlock base;
  base.player = last;
  base.score = current[last];
  base.step.kind = HhCase::kBase;
  switch (t.kind) {
    case RootKind::B: base.step.solo = current[last] + Rational(1, 2); break;
    case RootKind::C: base.step.solo = (current[last] + 1) / 2; break;
    default:
      if (current[last] != 0)
        fail(ErrorCode::kInternal, "type D base case left a nonzero score");
  }
  if (base.step.solo) set_solo(last, *base.step.solo);
  result.trace.push_back(std::move(base));

  result.tournament = Tournament(std::move(g), std::move(probs));
  if (mean_score(result.tournament) != RationalVector(x.begin(), x.end()))
    fail(ErrorCode::kInternal, "constructed tournament misses the target");
  return result;
}

Tournament hh_construct(const RootType& t, std::span<const Rational> x) {
  return hh_construct_traced(t, x).tournament;
}

std::string format_hh_trace(const RootType& t,
                            const std::vector<HhTraceBlock>& trace) {
  const std::string solo_tag = t.kind == RootKind::B ? "h=" :
                               t.kind == RootKind::C ? "l=" : "";
  const int width = 9;
  std::ostringstream os;
  auto cell = [&](const std::string& s) { os << std::setw(width) << s; };

  os << "Havel-Hakimi construction on K_" << to_string(t) << "\n";
  for (std::size_t b = 0; b < trace.size(); ++b) {
    const HhTraceBlock& block = trace[b];
    const HhStep& step = block.step;
    const bool complemented = step.kind == HhCase::kStrong;
    const char letter = complemented ? 'q' : 'p';

    os << "\nblock " << b + 1 << ": player " << block.player + 1;
    switch (step.kind) {
      case HhCase::kWeak: os << " (x < 0, p-values"; break;
      case HhCase::kStrong: os << " (x > 0, q-values"; break;
      case HhCase::kZero: os << " (x = 0, p-values"; break;
      case HhCase::kBase: os << " (last player, p-values"; break;
    }
    if (step.kind == HhCase::kWeak || step.kind == HhCase::kStrong)
      os << ", gamma* = " << format_decimal(step.gamma_star);
    os << ")\n";

    // Eliminated player first, then opponents by decreasing |x|.
    std::vector<std::size_t> cols(block.opponents.size());
    std::iota(cols.begin(), cols.end(), 0);
    std::reverse(cols.begin(), cols.end());

    os << std::left << std::setw(8) << "player" << std::right;
    cell(std::to_string(block.player + 1));
    for (std::size_t c : cols) cell(std::to_string(block.opponents[c] + 1));
    os << "\n" << std::left << std::setw(8) << "score" << std::right;
    cell(format_decimal(block.score));
    for (std::size_t c : cols) cell(format_decimal(block.opponent_scores[c]));

    os << "\n" << std::left << std::setw(8) << (std::string(1, letter) + "-") << std::right;
    cell(step.solo ? solo_tag + format_decimal(*step.solo) : "");
    for (std::size_t c : cols) cell(format_decimal(step.neg[c]));
    os << "\n" << std::left << std::setw(8) << (std::string(1, letter) + "+") << std::right;
    cell("");
    for (std::size_t c : cols) cell(format_decimal(step.pos[c]));

    // Points the eliminated player collects from each of its games.
    os << "\n" << std::left << std::setw(8) << "points" << std::right;
    Rational total = 0;
    if (step.solo) {
      Rational p = step.kind == HhCase::kBase ? *step.solo : *step.win_solo();
      Rational pts = (t.kind == RootKind::C ? 2 : 1) * (p - Rational(1, 2));
      total += pts;
      cell(format_decimal(pts));
    } else {
      cell("");
    }
    for (std::size_t c : cols) {
      Rational pts = step.win_neg(c) + step.win_pos(c) - 1;
      total += pts;
      cell(format_decimal(pts));
    }
    os << "  | " << format_decimal(total) << "\n";
  }
  // Empty cells leave trailing blanks.
  std::string text = os.str(), out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    std::string line = text.substr(start, end - start);
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
    start = end + 1;
  }
  return out;
}

}  // namespace coxtour
