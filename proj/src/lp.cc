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

#include "coxtour/lp.h"

#include <limits>
#include <vector>

#include "coxtour/error.h"

namespace coxtour {

std::optional<RationalVector> solve_box_feasibility(
    const RationalMatrix& a, std::span<const Rational> b) {
  const std::size_t rows = a.rows();
  const std::size_t m = a.cols();
  if (b.size() != rows)
    fail(ErrorCode::kInvalidArgument, "right-hand side has the wrong length");
  const std::size_t vars = m + rows;  // structural, then one artificial per row

  // Tableau B^{-1} [A | I] with b made non-negative row by row.
  RationalMatrix t(rows, vars, Rational(0));
  RationalVector value(rows);
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    bool flip = b[r] < 0;
    for (std::size_t c = 0; c < m; ++c) t(r, c) = flip ? Rational(-a(r, c)) : a(r, c);
    t(r, m + r) = 1;
    value[r] = flip ? Rational(-b[r]) : b[r];
    basis[r] = m + r;
  }
  std::vector<char> is_basic(vars, 0);
  for (std::size_t r = 0; r < rows; ++r) is_basic[m + r] = 1;
  std::vector<char> at_upper(vars, 0);  // nonbasic structurals only
  auto has_upper = [m](std::size_t j) { return j < m; };
  auto cost = [m](std::size_t j) { return j < m ? 0 : 1; };

  while (true) {
    // Bland: first improving nonbasic column.
    std::size_t enter = vars;
    int direction = 0;
    for (std::size_t j = 0; j < vars && enter == vars; ++j) {
      if (is_basic[j]) continue;
      Rational reduced = cost(j);
      for (std::size_t r = 0; r < rows; ++r)
        if (cost(basis[r]) && sgn(t(r, j)) != 0) reduced -= t(r, j);
      if (!at_upper[j] && reduced < 0) {
        enter = j;
        direction = 1;
      } else if (at_upper[j] && reduced > 0) {
        enter = j;
        direction = -1;
      }
    }
    if (enter == vars) break;

    // Ratio test. Basic value r moves by -direction * t(r, enter) per unit.
    std::optional<Rational> best;
    std::size_t leave_row = rows;  // rows == bound flip of the entering var
    std::size_t leave_var = vars;
    bool leave_to_upper = false;
    if (has_upper(enter)) {
      best = Rational(1);
      leave_var = enter;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      int slope = -direction * sgn(t(r, enter));
      if (slope == 0) continue;
      Rational step;
      bool to_upper = false;
      if (slope < 0) {
        step = value[r] / abs(t(r, enter));
      } else if (has_upper(basis[r])) {
        step = (1 - value[r]) / abs(t(r, enter));
        to_upper = true;
      } else {
        continue;
      }
      if (!best || step < *best || (step == *best && basis[r] < leave_var)) {
        best = step;
        leave_row = r;
        leave_var = basis[r];
        leave_to_upper = to_upper;
      }
    }
    if (!best) fail(ErrorCode::kInternal, "phase-one simplex unbounded");
    const Rational theta = *best;

    for (std::size_t r = 0; r < rows; ++r)
      if (sgn(t(r, enter)) != 0) value[r] -= direction * theta * t(r, enter);

    if (leave_row == rows) {
      at_upper[enter] = !at_upper[enter];
      continue;
    }

    Rational entering_value = at_upper[enter] ? Rational(1) : Rational(0);
    entering_value += direction * theta;

    const Rational pivot = t(leave_row, enter);
    for (std::size_t c = 0; c < vars; ++c) t(leave_row, c) /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave_row || sgn(t(r, enter)) == 0) continue;
      const Rational factor = t(r, enter);
      for (std::size_t c = 0; c < vars; ++c)
        if (sgn(t(leave_row, c)) != 0) t(r, c) -= factor * t(leave_row, c);
    }

    is_basic[leave_var] = 0;
    at_upper[leave_var] = leave_to_upper;
    is_basic[enter] = 1;
    at_upper[enter] = 0;
    basis[leave_row] = enter;
    value[leave_row] = entering_value;
  }

  Rational infeasibility = 0;
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] >= m) infeasibility += value[r];
  if (infeasibility != 0) return std::nullopt;

  RationalVector p(m);
  for (std::size_t j = 0; j < m; ++j) p[j] = at_upper[j] ? 1 : 0;
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] < m) p[basis[r]] = value[r];
  return p;
}

std::optional<RationalVector> kernel_vector(const RationalMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  RationalMatrix r = a;
  std::vector<std::size_t> pivot_col;  // pivot column of each reduced row
  std::vector<char> is_pivot(cols, 0);
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && sgn(r(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != row)
      for (std::size_t k = 0; k < cols; ++k) std::swap(r(p, k), r(row, k));
    const Rational lead = r(row, c);
    for (std::size_t k = 0; k < cols; ++k) r(row, k) /= lead;
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == row || sgn(r(q, c)) == 0) continue;
      const Rational factor = r(q, c);
      for (std::size_t k = 0; k < cols; ++k) r(q, k) -= factor * r(row, k);
    }
    pivot_col.push_back(c);
    is_pivot[c] = 1;
    ++row;
  }

  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector c(cols, Rational(0));
    c[free] = 1;
    for (std::size_t q = 0; q < pivot_col.size(); ++q) c[pivot_col[q]] = -r(q, free);
    return c;
  }
  return std::nullopt;
}

}  // namespace coxtour
