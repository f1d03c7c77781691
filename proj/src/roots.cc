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

#include "coxtour/roots.h"

#include <algorithm>

#include "coxtour/error.h"

namespace coxtour {

RootType RootType::make(RootKind kind, int n) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "rank must be >= 1");
  if (kind == RootKind::A && n < 2)
    fail(ErrorCode::kInvalidArgument, "type A needs at least two players");
  return RootType{kind, n};
}

std::string to_string(RootKind kind) {
  switch (kind) {
    case RootKind::A: return "A";
    case RootKind::B: return "B";
    case RootKind::C: return "C";
    case RootKind::D: return "D";
  }
  return "?";
}

RootKind parse_root_kind(std::string_view text) {
  if (text == "A" || text == "a") return RootKind::A;
  if (text == "B" || text == "b") return RootKind::B;
  if (text == "C" || text == "c") return RootKind::C;
  if (text == "D" || text == "d") return RootKind::D;
  fail(ErrorCode::kParse, "unknown root type '" + std::string(text) + "'");
}

std::string to_string(const RootType& t) {
  if (t.kind == RootKind::A) return "A" + std::to_string(t.n - 1);
  return to_string(t.kind) + std::to_string(t.n);
}

void require_bcd(const RootType& t, std::string_view what) {
  if (t.kind == RootKind::A)
    fail(ErrorCode::kUnsupportedType,
         std::string(what) + " is defined for types B, C and D only");
}

Rational delta_of(const RootType& t) {
  require_bcd(t, "delta");
  switch (t.kind) {
    case RootKind::B: return Rational(1, 2);
    case RootKind::C: return Rational(1);
    default: return Rational(0);
  }
}

RationalVector rho_complete(const RootType& t) {
  Rational delta = delta_of(t);
  RationalVector rho;
  rho.reserve(t.n);
  for (int i = 0; i < t.n; ++i) rho.push_back(Rational(i) + delta);
  return rho;
}

bool AdmissibleSubset::valid(int n) const {
  auto ok = [n](const std::vector<int>& v) {
    if (!std::is_sorted(v.begin(), v.end())) return false;
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) return false;
    return std::all_of(v.begin(), v.end(),
                       [n](int i) { return i >= 0 && i < n; });
  };
  if (!ok(plus) || !ok(minus)) return false;
  std::vector<int> both;
  std::set_intersection(plus.begin(), plus.end(), minus.begin(), minus.end(),
                        std::back_inserter(both));
  return both.empty();
}

std::vector<int> reduce_subset(const AdmissibleSubset& s) {
  std::vector<int> out;
  std::set_union(s.plus.begin(), s.plus.end(), s.minus.begin(), s.minus.end(),
                 std::back_inserter(out));
  return out;
}

}  // namespace coxtour
