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

#include "coxtour/btfit.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "coxtour/error.h"
#include "coxtour/majorize.h"
#include "coxtour/rational.h"

namespace coxtour {
namespace {

// sigma(u) - 1/2, odd in u.
double centered(double u) { return 0.5 * std::tanh(0.5 * u); }

double slope(double u) {
  const double e = std::exp(-std::abs(u));
  return e / ((1 + e) * (1 + e));
}

double solo_weight(const RootType& t) {
  switch (t.kind) {
    case RootKind::B: return 1;
    case RootKind::C: return 2;
    default: return 0;
  }
}

void check_input(std::size_t size, const RootType& t) {
  require_bcd(t, "Bradley-Terry model");
  if (static_cast<int>(size) != t.n)
    fail(ErrorCode::kInvalidArgument, "vector length differs from rank");
}

Eigen::VectorXd residual_of(std::span<const double> lambda, const RootType& t,
                            const Eigen::VectorXd& x) {
  std::vector<double> f = bt_forward(lambda, t);
  return Eigen::Map<const Eigen::VectorXd>(f.data(), f.size()) - x;
}

}  // namespace

std::vector<double> bt_forward(std::span<const double> lambda, const RootType& t) {
  check_input(lambda.size(), t);
  const double c = solo_weight(t);
  std::vector<double> x(t.n, 0.0);
  for (int i = 0; i < t.n; ++i) {
    for (int j = 0; j < t.n; ++j)
      if (j != i) x[i] += centered(lambda[i] - lambda[j]) + centered(lambda[i] + lambda[j]);
    x[i] += c * centered(lambda[i]);
  }
  return x;
}

Matrix<double> bt_jacobian(std::span<const double> lambda, const RootType& t) {
  check_input(lambda.size(), t);
  const double c = solo_weight(t);
  Matrix<double> jac(t.n, t.n, 0.0);
  for (int i = 0; i < t.n; ++i) {
    jac(i, i) = c * slope(lambda[i]);
    for (int j = 0; j < t.n; ++j) {
      if (j == i) continue;
      const double minus = slope(lambda[i] - lambda[j]);
      const double plus = slope(lambda[i] + lambda[j]);
      jac(i, i) += minus + plus;
      jac(i, j) = plus - minus;
    }
  }
  return jac;
}

BtFitResult bt_fit(std::span<const double> x, const RootType& t,
                   const BtFitOptions& options) {
  check_input(x.size(), t);
  RationalVector exact;
  for (double v : x) {
    if (!std::isfinite(v)) fail(ErrorCode::kInvalidArgument, "scores must be finite");
    exact.push_back(abs(from_double(v)));
  }
  if (!strict_weak_submajorizes(exact, rho_complete(t)))
    fail(ErrorCode::kInfeasible,
         "Bradley-Terry fit needs |x| strictly inside the weak majorization bound");

  const int n = t.n;
  const Eigen::VectorXd target = Eigen::Map<const Eigen::VectorXd>(x.data(), n);
  BtFitResult result;
  result.lambda.assign(n, 0.0);
  Eigen::VectorXd r = residual_of(result.lambda, t, target);
  while (r.lpNorm<Eigen::Infinity>() > options.tol) {
    if (result.iterations == options.max_iterations) break;
    ++result.iterations;
    Matrix<double> jm = bt_jacobian(result.lambda, t);
    Eigen::MatrixXd jac(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) jac(i, j) = jm(i, j);
    Eigen::VectorXd step = jac.partialPivLu().solve(-r);

    // Halve the step until the residual decreases.
    double scale = 1;
    std::vector<double> trial(n);
    Eigen::VectorXd trial_r;
    bool improved = false;
    for (int k = 0; k < 60 && !improved; ++k, scale /= 2) {
      for (int i = 0; i < n; ++i) trial[i] = result.lambda[i] + scale * step[i];
      trial_r = residual_of(trial, t, target);
      improved = trial_r.norm() < r.norm();
    }
    if (!improved) break;
    result.lambda = trial;
    r = trial_r;
  }
  result.residual = r.lpNorm<Eigen::Infinity>();
  if (result.residual > options.tol) {
    std::ostringstream os;
    os << "Newton iteration stalled after " << result.iterations
       << " steps with residual " << result.residual;
    fail(ErrorCode::kNoConvergence, os.str());
  }
  return result;
}

}  // namespace coxtour
