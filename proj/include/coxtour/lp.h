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

#ifndef COXTOUR_LP_H_
#define COXTOUR_LP_H_

#include <optional>
#include <span>

#include "coxtour/matrix.h"
#include "coxtour/rational.h"

namespace coxtour {

// Finds p in [0,1]^m with a * p == b, or nullopt if none exists.
// Phase-one bounded-variable simplex in exact arithmetic with Bland's
// rule, so it neither cycles nor needs tolerances.
std::optional<RationalVector> solve_box_feasibility(const RationalMatrix& a,
                                                    std::span<const Rational> b);

// A nonzero c with a * c == 0, or nullopt if the columns are independent.
std::optional<RationalVector> kernel_vector(const RationalMatrix& a);

}  // namespace coxtour

#endif  // COXTOUR_LP_H_
