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

#include "coxtour/birkhoff.h"

#include <cstdlib>
#include <functional>
#include <sstream>

#include "coxtour/error.h"
#include "coxtour/majorize.h"

namespace coxtour {
namespace {

void require_square(const RationalMatrix& m) {
  if (m.rows() != m.cols())
    fail(ErrorCode::kInvalidArgument, "matrix must be square");
}

void require_feasible(std::span<const Rational> x, const RootType& t) {
  require_bcd(t, "signed Birkhoff decomposition");
  if (static_cast<int>(x.size()) != t.n)
    fail(ErrorCode::kInvalidArgument, "score length differs from rank");
  if (!is_mean_score_complete(t, x))
    fail(ErrorCode::kInfeasible, format_vector(x) + " is not a mean score on K_" +
                                     to_string(t));
}

// Perfect matching on the support via augmenting paths; rows and columns are
// tried in index order. Returns the column matched to each row.
std::optional<std::vector<int>> perfect_matching(
    const Matrix<char>& support) {
  const int n = static_cast<int>(support.rows());
  std::vector<int> row_of(n, -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int r) {
    for (int c = 0; c < n; ++c) {
      if (!support(r, c) || seen[c]) continue;
      seen[c] = 1;
      if (row_of[c] < 0 || augment(row_of[c])) {
        row_of[c] = r;
        return true;
      }
    }
    return false;
  };
  for (int r = 0; r < n; ++r) {
    seen.assign(n, 0);
    if (!augment(r)) return std::nullopt;
  }
  std::vector<int> col_of(n);
  for (int c = 0; c < n; ++c) col_of[row_of[c]] = c;
  return col_of;
}

void require_probability(const FinitelySupportedMeasure& m) {
  for (const auto& [k, p] : m.mass)
    if (p < 0 || k == 0)
      fail(ErrorCode::kInvalidArgument, "measure needs non-negative mass on nonzero points");
  if (m.total() != 1)
    fail(ErrorCode::kInvalidArgument, "expected a probability measure, total mass " +
                                          format_rational(m.total()));
}

}  // namespace

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation phi;
  for (int i = 1; i <= n; ++i) phi.images.push_back(i);
  return phi;
}

bool SignedPermutation::valid() const {
  std::vector<char> hit(images.size() + 1, 0);
  for (int v : images) {
    int a = std::abs(v);
    if (a < 1 || a > n() || hit[a]) return false;
    hit[a] = 1;
  }
  return true;
}

RationalMatrix SignedPermutation::matrix() const {
  if (!valid()) fail(ErrorCode::kInvalidArgument, "not a signed permutation");
  RationalMatrix m(n(), n(), Rational(0));
  for (int i = 0; i < n(); ++i)
    m(i, std::abs(images[i]) - 1) = images[i] > 0 ? 1 : -1;
  return m;
}

std::string format_permutation(const SignedPermutation& phi) {
  std::string out = "[";
  for (int i = 0; i < phi.n(); ++i) {
    if (i) out += ", ";
    out += std::to_string(phi.images[i]);
  }
  return out + "]";
}

Tournament vertex_tournament(const SignedPermutation& phi, const RootType& t) {
  require_bcd(t, "vertex_tournament");
  if (phi.n() != t.n || !phi.valid())
    fail(ErrorCode::kInvalidArgument, "not a signed permutation of rank " +
                                          std::to_string(t.n));
  SignedGraph g = complete_graph(t);
  RationalVector probs;
  probs.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    const int a = phi.images[e.i];
    bool win = false;
    switch (e.kind) {
      case EdgeKind::kNegative: win = a > phi.images[e.j]; break;
      case EdgeKind::kPositive: win = a + phi.images[e.j] > 0; break;
      case EdgeKind::kHalf:
      case EdgeKind::kLoop: win = a > 0; break;
    }
    probs.emplace_back(win ? 1 : 0);
  }
  return Tournament(std::move(g), std::move(probs));
}

RationalMatrix signed_transfer(std::span<const Rational> x, const RootType& t) {
  require_feasible(x, t);
  RationalMatrix s = transfer_matrix(abs(x), rho_complete(t)).entries;
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) s(i, j) *= sign(x[i]);
  return s;
}

RationalMatrix pad_to_doubly_stochastic(const RationalMatrix& b) {
  require_square(b);
  if (!is_doubly_substochastic(b))
    fail(ErrorCode::kInvalidArgument, "padding needs a doubly sub-stochastic matrix");
  const std::size_t n = b.rows();
  RationalVector row_def(n, Rational(1)), col_def(n, Rational(1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      row_def[i] -= b(i, j);
      col_def[j] -= b(i, j);
    }
  RationalMatrix e(n, n, Rational(0));
  std::size_t r = 0, c = 0;
  while (true) {
    while (r < n && row_def[r] == 0) ++r;
    while (c < n && col_def[c] == 0) ++c;
    if (r == n || c == n) break;
    Rational add = std::min(row_def[r], col_def[c]);
    e(r, c) += add;
    row_def[r] -= add;
    col_def[c] -= add;
  }
  return e;
}

SignedDecomposition birkhoff_decompose(std::span<const Rational> x,
                                       const RootType& t) {
  RationalMatrix signed_part = signed_transfer(x, t);
  const int n = t.n;
  RationalMatrix weight(n, n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) weight(i, j) = abs(signed_part(i, j));
  RationalMatrix neutral = pad_to_doubly_stochastic(weight);

  SignedDecomposition out;
  Rational remaining = n;
  const int round_cap = n * n + 2 * n;
  while (remaining > 0) {
    if (out.rounds == round_cap)
      fail(ErrorCode::kInternal, "decomposition exceeded its round bound");
    Matrix<char> support(n, n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        support(i, j) = weight(i, j) > 0 || neutral(i, j) > 0;
    auto match = perfect_matching(support);
    if (!match) fail(ErrorCode::kInternal, "no perfect matching on the support");

    // Prefer the signed cell where both are available.
    std::vector<char> uses_neutral(n);
    Rational lambda = 1;
    for (int i = 0; i < n; ++i) {
      const int j = (*match)[i];
      uses_neutral[i] = weight(i, j) == 0;
      lambda = std::min(lambda, uses_neutral[i] ? neutral(i, j) : weight(i, j));
    }
    bool any_neutral = false;
    SignedPermutation plus, minus;
    for (int i = 0; i < n; ++i) {
      const int j = (*match)[i];
      if (uses_neutral[i]) {
        neutral(i, j) -= lambda;
        any_neutral = true;
        plus.images.push_back(j + 1);
        minus.images.push_back(-(j + 1));
      } else {
        weight(i, j) -= lambda;
        int s = sign(signed_part(i, j));
        plus.images.push_back(s * (j + 1));
        minus.images.push_back(s * (j + 1));
      }
    }
    if (any_neutral) {
      out.terms.push_back({lambda / 2, std::move(plus)});
      out.terms.push_back({lambda / 2, std::move(minus)});
    } else {
      out.terms.push_back({lambda, std::move(plus)});
    }
    remaining -= lambda * n;
    ++out.rounds;
  }

  RationalVector rho = rho_complete(t);
  RationalVector check(n, Rational(0));
  for (const auto& term : out.terms) {
    RationalVector v = multiply(term.perm.matrix(), rho);
    for (int i = 0; i < n; ++i) check[i] += term.weight * v[i];
  }
  if (check != RationalVector(x.begin(), x.end()))
    fail(ErrorCode::kInternal, "decomposition reproduces " + format_vector(check));
  return out;
}

std::string format_decomposition(const SignedDecomposition& d) {
  std::ostringstream os;
  for (const auto& term : d.terms)
    os << format_permutation(term.perm) << " @ " << format_rational(term.weight)
       << "\n";
  return os.str();
}

Tournament mixture_tournament(const SignedDecomposition& d, const RootType& t) {
  SignedGraph g = complete_graph(t);
  RationalVector probs(g.edge_count(), Rational(0));
  Rational total = 0;
  for (const auto& term : d.terms) {
    if (term.weight <= 0)
      fail(ErrorCode::kInvalidArgument, "decomposition weights must be positive");
    Tournament v = vertex_tournament(term.perm, t);
    for (std::size_t e = 0; e < probs.size(); ++e)
      probs[e] += term.weight * v.probs()[e];
    total += term.weight;
  }
  if (total != 1)
    fail(ErrorCode::kInvalidArgument, "decomposition weights sum to " +
                                          format_rational(total));
  return Tournament(std::move(g), std::move(probs));
}

Rational FinitelySupportedMeasure::total() const {
  Rational s = 0;
  for (const auto& [k, p] : mass) s += p;
  return s;
}

Rational psi_pair(const FinitelySupportedMeasure& a,
                  const FinitelySupportedMeasure& b, int sign_flag) {
  if (sign_flag != 1 && sign_flag != -1)
    fail(ErrorCode::kInvalidArgument, "psi sign must be +1 or -1");
  require_probability(a);
  require_probability(b);
  Rational out = 0;
  for (const auto& [u, pu] : a.mass)
    for (const auto& [v, pv] : b.mass) {
      const int s = u + sign_flag * v;
      if (s > 0) out += pu * pv / 2;
      if (s < 0) out -= pu * pv / 2;
    }
  return out;
}

Rational psi_solo(const FinitelySupportedMeasure& a) {
  require_probability(a);
  Rational out = 0;
  for (const auto& [u, pu] : a.mass) out += u > 0 ? pu : Rational(-pu);
  return out;
}

std::vector<FinitelySupportedMeasure> strassen_measures(
    std::span<const Rational> x, const RootType& t) {
  require_feasible(x, t);
  RationalMatrix s = transfer_matrix(abs(x), rho_complete(t)).entries;
  RationalMatrix e = pad_to_doubly_stochastic(s);
  std::vector<FinitelySupportedMeasure> nu(t.n);
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) {
      Rational up = e(i, j) / 2 + (x[i] > 0 ? s(i, j) : Rational(0));
      Rational down = e(i, j) / 2 + (x[i] < 0 ? s(i, j) : Rational(0));
      if (up > 0) nu[i].mass[j + 1] = up;
      if (down > 0) nu[i].mass[-(j + 1)] = down;
    }
  return nu;
}

Tournament strassen_tournament(const std::vector<FinitelySupportedMeasure>& nu,
                               const RootType& t, SoloRule rule) {
  if (t.kind != RootKind::C)
    fail(ErrorCode::kUnsupportedType, "Strassen construction is for type C only");
  if (static_cast<int>(nu.size()) != t.n)
    fail(ErrorCode::kInvalidArgument, "need one measure per player");
  SignedGraph g = complete_graph(t);
  RationalVector probs;
  probs.reserve(g.edge_count());
  const Rational half(1, 2);
  for (const Edge& e : g.edges()) {
    switch (e.kind) {
      case EdgeKind::kNegative: probs.push_back(psi_pair(nu[e.i], nu[e.j], -1) + half); break;
      case EdgeKind::kPositive: probs.push_back(psi_pair(nu[e.i], nu[e.j], 1) + half); break;
      default: {
        Rational solo = psi_solo(nu[e.i]);
        if (rule == SoloRule::kCorrected)
          probs.push_back(half + (solo / 2 + psi_pair(nu[e.i], nu[e.i], 1)) / 2);
        else
          probs.push_back((solo + 1) / 2);
      }
    }
  }
  return Tournament(std::move(g), std::move(probs));
}

Tournament strassen_construct(std::span<const Rational> x, const RootType& t) {
  if (t.kind != RootKind::C)
    fail(ErrorCode::kUnsupportedType, "Strassen construction is for type C only");
  Tournament out = strassen_tournament(strassen_measures(x, t), t, SoloRule::kCorrected);
  if (mean_score(out) != RationalVector(x.begin(), x.end()))
    fail(ErrorCode::kInternal, "Strassen tournament misses the target");
  return out;
}

}  // namespace coxtour
