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

#include "coxtour/rational.h"

#include "doctest.h"
#include "test_support.h"

namespace coxtour {
namespace {

TEST_CASE("decimals parse exactly") {
  CHECK(parse_rational("-5.2") == Rational(-26, 5));
  CHECK(parse_rational(".4") == Rational(2, 5));
  CHECK(parse_rational("3.35") == Rational(67, 20));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("2.5E2") == 250);
  CHECK(parse_rational("+7") == 7);
  CHECK(parse_rational("\xe2\x88\x92" "4.1") == Rational(-41, 10));
}

TEST_CASE("leading zeros are decimal") {
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("0.9") == Rational(9, 10));
  CHECK(parse_rational("010") == 10);
  CHECK(parse_rational("010/08") == Rational(5, 4));
}

TEST_CASE("fractions parse and reduce") {
  Rational q = parse_rational("6/-4");
  CHECK(q == Rational(-3, 2));
  CHECK(q.get_den() == 2);
  CHECK(parse_rational(" 5/2 ") == Rational(5, 2));
}

TEST_CASE("bad numbers are parse errors") {
  CHECK_ERROR_CODE(parse_rational("abc"), ErrorCode::kParse);
  CHECK_ERROR_CODE(parse_rational("1/0"), ErrorCode::kParse);
  CHECK_ERROR_CODE(parse_rational(""), ErrorCode::kParse);
  CHECK_ERROR_CODE(parse_rational("1.2.3"), ErrorCode::kParse);
}

TEST_CASE("lists accept tuples, CSV lines and comments") {
  CHECK(parse_rational_list("(0, 5/2)") == testing::rv({0, Rational(5, 2)}));
  CHECK(parse_rational_list("# scores\n-.4\n.5\n") ==
        testing::rv({Rational(-2, 5), Rational(1, 2)}));
  CHECK(parse_rational_list("[1; 2 3]").size() == 3);
  CHECK(parse_rational_list("").empty());
}

TEST_CASE("formatting") {
  CHECK(format_rational(Rational(-26, 5)) == "-26/5");
  CHECK(format_rational(Rational(4)) == "4");
  CHECK(format_decimal(Rational(67, 20)) == "3.35");
  CHECK(format_decimal(Rational(-1, 8)) == "-0.125");
  CHECK(format_decimal(Rational(1, 3)) == "1/3");
  CHECK(format_vector(testing::rv({1, Rational(-1, 2)})) == "(1, -1/2)");
}

TEST_CASE("doubles convert exactly") {
  CHECK(from_double(0.5) == Rational(1, 2));
  CHECK(from_double(-3.0) == -3);
  CHECK(from_double(0.1) != Rational(1, 10));
  CHECK_ERROR_CODE(from_double(1.0 / 0.0), ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace coxtour
