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

#include "coxtour/majorize.h"

#include <algorithm>
#include <functional>
#include <numeric>

#include "coxtour/error.h"

namespace coxtour {
namespace {

void require_same_length(std::span<const Rational> x,
                         std::span<const Rational> y) {
  if (x.size() != y.size())
    fail(ErrorCode::kInvalidArgument, "vectors differ in length");
}

void require_nonnegative(std::span<const Rational> v, const char* name) {
  for (const Rational& q : v)
    if (q < 0)
      fail(ErrorCode::kInvalidArgument, std::string(name) + " must be >= 0");
}

RationalVector sorted_desc(std::span<const Rational> v) {
  RationalVector s(v.begin(), v.end());
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

// Indices of v ordered by decreasing value, ties by index.
std::vector<std::size_t> order_desc(std::span<const Rational> v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  return idx;
}

// Binomial coefficient C(m, 2) for rational m that is a non-negative integer
// here; returns 0 for m < 2.
Rational choose2(const Rational& m) {
  if (m < 2) return 0;
  return m * (m - 1) / 2;
}

}  // namespace

std::optional<int> first_weak_violation(std::span<const Rational> x,
                                        std::span<const Rational> y) {
  require_same_length(x, y);
  RationalVector xs = sorted_desc(x);
  RationalVector ys = sorted_desc(y);
  Rational sx = 0, sy = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    if (sx > sy) return static_cast<int>(k + 1);
  }
  return std::nullopt;
}

bool weak_submajorizes(std::span<const Rational> x,
                       std::span<const Rational> y) {
  return !first_weak_violation(x, y).has_value();
}

bool strict_weak_submajorizes(std::span<const Rational> x,
                              std::span<const Rational> y) {
  require_same_length(x, y);
  RationalVector xs = sorted_desc(x);
  RationalVector ys = sorted_desc(y);
  Rational sx = 0, sy = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    if (sx >= sy) return false;
  }
  return true;
}

bool phi_ell_feasible(std::span<const Rational> x, const RootType& t) {
  if (static_cast<int>(x.size()) != t.n)
    fail(ErrorCode::kInvalidArgument, "score length differs from rank");
  Rational delta = delta_of(t);
  for (int step = 0; step < t.n; ++step) {
    Rational ell = delta + step;
    Rational lhs = 0;
    for (const Rational& xi : x) {
      Rational excess = abs(xi) - ell;
      if (excess > 0) lhs += excess;
    }
    if (lhs > choose2(Rational(t.n - step))) return false;
  }
  return true;
}

RationalVector dominating_vector(std::span<const Rational> x_abs,
                                 std::span<const Rational> y) {
  require_same_length(x_abs, y);
  require_nonnegative(x_abs, "x_abs");
  require_nonnegative(y, "y");
  if (auto k = first_weak_violation(x_abs, y))
    fail(ErrorCode::kInfeasible, "top-" + std::to_string(*k) +
                                     " partial sum of x exceeds that of y");

  // Water-fill from the bottom: u = max(x, c) with sum(u) == sum(y).
  RationalVector u(x_abs.begin(), x_abs.end());
  Rational deficit = sum(y) - sum(x_abs);
  if (deficit == 0 || u.empty()) return u;

  RationalVector asc(x_abs.begin(), x_abs.end());
  std::sort(asc.begin(), asc.end());
  // Raising the m smallest entries to level c costs m*c - (their sum).
  Rational level;
  Rational prefix = 0;
  for (std::size_t m = 1; m <= asc.size(); ++m) {
    prefix += asc[m - 1];
    Rational c = (deficit + prefix) / Rational(static_cast<long>(m));
    if (m == asc.size() || c <= asc[m]) {
      level = c;
      break;
    }
  }
  for (Rational& ui : u)
    if (ui < level) ui = level;
  return u;
}

TransferMatrix transfer_matrix(std::span<const Rational> x_abs,
                               std::span<const Rational> y) {
  const std::size_t n = y.size();
  RationalVector u = dominating_vector(x_abs, y);

  // Work in sorted coordinates: z starts at y sorted descending, target is
  // u sorted descending. Rows of `d` express z in terms of sorted y.
  std::vector<std::size_t> y_order = order_desc(y);
  std::vector<std::size_t> u_order = order_desc(u);
  RationalVector z(n), target(n);
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = y[y_order[k]];
    target[k] = u[u_order[k]];
  }

  RationalMatrix d = RationalMatrix::identity(n);
  int moves = 0;
  while (true) {
    std::size_t j = 0;
    while (j < n && z[j] == target[j]) ++j;
    if (j == n) break;
    // Partial sums of z dominate those of target with equality up to j.
    if (z[j] < target[j])
      fail(ErrorCode::kInternal, "T-transform invariant broken");
    std::size_t k = j + 1;
    while (k < n && z[k] >= target[k]) ++k;
    if (k == n) fail(ErrorCode::kInternal, "T-transform has no receiver");

    Rational amount = std::min<Rational>(z[j] - target[j], target[k] - z[k]);
    Rational t = amount / (z[j] - z[k]);
    for (std::size_t c = 0; c < n; ++c) {
      Rational rj = d(j, c), rk = d(k, c);
      d(j, c) = (1 - t) * rj + t * rk;
      d(k, c) = t * rj + (1 - t) * rk;
    }
    z[j] -= amount;
    z[k] += amount;
    ++moves;
  }

  // Back to original coordinates, then shrink rows from u down to x_abs.
  TransferMatrix out{RationalMatrix(n, n, Rational(0)), moves};
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t row = u_order[r];
    Rational scale = u[row] == 0 ? Rational(0) : Rational(x_abs[row] / u[row]);
    if (scale == 0) continue;
    for (std::size_t c = 0; c < n; ++c)
      if (d(r, c) != 0) out.entries(row, y_order[c]) = scale * d(r, c);
  }
  return out;
}

}  // namespace coxtour
