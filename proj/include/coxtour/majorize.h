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

#ifndef COXTOUR_MAJORIZE_H_
#define COXTOUR_MAJORIZE_H_

#include <optional>
#include <span>

#include "coxtour/matrix.h"
#include "coxtour/rational.h"
#include "coxtour/roots.h"

namespace coxtour {

// x is weakly sub-majorized by y: every top-k partial sum of x is at most the
// top-k partial sum of y. Exact.
bool weak_submajorizes(std::span<const Rational> x, std::span<const Rational> y);

// Same with strict inequality for every k.
bool strict_weak_submajorizes(std::span<const Rational> x,
                              std::span<const Rational> y);

// Smallest k (1-based) whose top-k inequality fails, or nullopt.
std::optional<int> first_weak_violation(std::span<const Rational> x,
                                        std::span<const Rational> y);

// sum_i (|x_i| - l)^+ <= C(n - (l - delta), 2) for l = delta, ..., n-1+delta.
bool phi_ell_feasible(std::span<const Rational> x, const RootType& t);

// Some u >= x_abs (componentwise) majorized by y with sum(u) == sum(y).
// Requires x_abs, y >= 0 and x_abs weakly sub-majorized by y.
RationalVector dominating_vector(std::span<const Rational> x_abs,
                                 std::span<const Rational> y);

struct TransferMatrix {
  RationalMatrix entries;  // doubly sub-stochastic
  int t_transforms = 0;    // elementary moves used for the stochastic part
};

// Doubly sub-stochastic S with S * y == x_abs exactly: a product of at most
// n-1 T-transforms carrying y to dominating_vector(x_abs, y), followed by a
// row scaling.
TransferMatrix transfer_matrix(std::span<const Rational> x_abs,
                               std::span<const Rational> y);

}  // namespace coxtour

#endif  // COXTOUR_MAJORIZE_H_
