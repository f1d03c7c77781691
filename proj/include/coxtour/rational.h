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

#ifndef COXTOUR_RATIONAL_H_
#define COXTOUR_RATIONAL_H_

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coxtour {

// Exact scalar for every combinatorial algorithm in the library.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Accepts integers ("-3"), fractions ("7/4") and decimals ("-5.2", ".5",
// "1.25e-2"). Decimals are converted exactly: "-5.2" is -26/5.
Rational parse_rational(std::string_view text);

// "a/b" in lowest terms, or "a" when the denominator is 1.
std::string format_rational(const Rational& q);

// Terminating decimals are printed as decimals ("-5.2", "0.75"); anything
// else falls back to format_rational.
std::string format_decimal(const Rational& q);

// Parses a list of numbers separated by commas, whitespace or newlines.
// Surrounding parentheses/brackets are ignored and '#' starts a comment.
RationalVector parse_rational_list(std::string_view text);

std::string format_vector(std::span<const Rational> v);

Rational abs(const Rational& q);
int sign(const Rational& q);

RationalVector abs(std::span<const Rational> v);
Rational sum(std::span<const Rational> v);

// Exact conversion; every finite double is a dyadic rational.
Rational from_double(double d);
std::vector<double> to_doubles(std::span<const Rational> v);

}  // namespace coxtour

#endif  // COXTOUR_RATIONAL_H_
