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

#ifndef COXTOUR_ROOTS_H_
#define COXTOUR_ROOTS_H_

#include <string>
#include <string_view>
#include <vector>

#include "coxtour/rational.h"

namespace coxtour {

enum class RootKind { A, B, C, D };

// A root system of one of the classical families together with its rank.
// For B/C/D the rank n is the number of players; A_{n-1} is stored with
// n players as well, so `n` is always the player count.
struct RootType {
  RootKind kind = RootKind::C;
  int n = 1;

  // Validates n >= 1 (n >= 2 for kind A).
  static RootType make(RootKind kind, int n);

  friend bool operator==(const RootType&, const RootType&) = default;
};

std::string to_string(RootKind kind);
RootKind parse_root_kind(std::string_view text);
std::string to_string(const RootType& t);  // e.g. "C7"

// Throws kUnsupportedType unless t is of type B, C or D.
void require_bcd(const RootType& t, std::string_view what);

// Solitaire offset: 1/2 for B, 1 for C, 0 for D.
Rational delta_of(const RootType& t);

// (0, 1, ..., n-1) + delta * (1, ..., 1); the top corner of the Coxeter
// permutahedron after sorting.
RationalVector rho_complete(const RootType& t);

// A signed subset S of {+-1..+-n} with no pair {i, -i}. `plus` holds the
// indices i with i in S, `minus` those with -i in S. Indices are 0-based.
struct AdmissibleSubset {
  std::vector<int> plus;
  std::vector<int> minus;

  // Sorted, duplicate-free, disjoint and within [0, n).
  bool valid(int n) const;
};

// S^|| = plus U minus, sorted.
std::vector<int> reduce_subset(const AdmissibleSubset& s);

}  // namespace coxtour

#endif  // COXTOUR_ROOTS_H_
