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

#include "coxtour/matrix.h"

#include "coxtour/error.h"

namespace coxtour {

RationalVector multiply(const RationalMatrix& m, std::span<const Rational> v) {
  if (m.cols() != v.size())
    fail(ErrorCode::kInvalidArgument, "matrix-vector size mismatch");
  RationalVector out(m.rows(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) out[r] += m(r, c) * v[c];
  return out;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows())
    fail(ErrorCode::kInvalidArgument, "matrix-matrix size mismatch");
  RationalMatrix out(a.rows(), b.cols(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

namespace {

bool check_sums(const RationalMatrix& m, bool exact) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) < 0) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) s += m(r, c);
    if (exact ? s != 1 : s > 1) return false;
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Rational s = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) s += m(r, c);
    if (exact ? s != 1 : s > 1) return false;
  }
  return true;
}

}  // namespace

bool is_doubly_substochastic(const RationalMatrix& m) {
  return check_sums(m, false);
}

bool is_doubly_stochastic(const RationalMatrix& m) {
  return m.rows() == m.cols() && check_sums(m, true);
}

}  // namespace coxtour
