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

#ifndef COXTOUR_BTFIT_H_
#define COXTOUR_BTFIT_H_

#include <span>
#include <vector>

#include "coxtour/matrix.h"
#include "coxtour/roots.h"

namespace coxtour {

// Bradley-Terry games: the competitive game between i and j is won by i with
// probability sigma(l_i - l_j), the cooperative one with sigma(l_i + l_j),
// and a solitaire game with sigma(l_i). Binary64 throughout.
std::vector<double> bt_forward(std::span<const double> lambda, const RootType& t);

// d x_i / d lambda_j; symmetric.
Matrix<double> bt_jacobian(std::span<const double> lambda, const RootType& t);

struct BtFitOptions {
  double tol = 1e-9;
  int max_iterations = 200;
};

struct BtFitResult {
  std::vector<double> lambda;
  double residual = 0;  // max-norm of bt_forward(lambda) - x
  int iterations = 0;
};

// Damped Newton from lambda = 0. Requires |x| strictly weakly sub-majorized
// by rho_complete(t) (checked exactly on the binary values); throws
// kInfeasible otherwise and kNoConvergence with the residual when the
// iteration cap is hit.
BtFitResult bt_fit(std::span<const double> x, const RootType& t,
                   const BtFitOptions& options = {});

}  // namespace coxtour

#endif  // COXTOUR_BTFIT_H_
