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

#include <cctype>
#include <cmath>
#include <sstream>
#include <string>

#include "coxtour/error.h"

namespace coxtour {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_number(std::string_view text) {
  fail(ErrorCode::kParse, "not a number: '" + std::string(text) + "'");
}

// Strips a leading '+', '-' or U+2212 (MINUS SIGN). Returns true if negative.
bool take_sign(std::string_view& s) {
  if (s.starts_with("\xE2\x88\x92")) {
    s.remove_prefix(3);
    return true;
  }
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    bool neg = s.front() == '-';
    s.remove_prefix(1);
    return neg;
  }
  return false;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = take_sign(s);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = trim(s.substr(0, slash));
    std::string_view den = trim(s.substr(slash + 1));
    bool den_negative = take_sign(den);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) fail(ErrorCode::kParse, "zero denominator: '" + std::string(text) + "'");
    Rational q(mpz_class(std::string(num), 10), d);
    q.canonicalize();
    return (negative != den_negative) ? Rational(-q) : q;
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    bool exp_negative = take_sign(exp_text);
    if (!all_digits(exp_text) || exp_text.size() > 6) bad_number(text);
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }

  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad_number(text);
  if (!int_part.empty() && !all_digits(int_part)) bad_number(text);
  if (!frac_part.empty() && !all_digits(frac_part)) bad_number(text);

  std::string digits = std::string(int_part) + std::string(frac_part);
  Rational q(mpz_class(digits, 10), pow10(frac_part.size()));
  if (exponent > 0) q *= pow10(static_cast<unsigned long>(exponent));
  if (exponent < 0) q /= pow10(static_cast<unsigned long>(-exponent));
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_decimal(const Rational& q) {
  mpz_class den = q.get_den();
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return format_rational(q);

  unsigned long places = std::max(twos, fives);
  mpz_class scaled_num = q.get_num() * pow10(places) / q.get_den();
  bool negative = scaled_num < 0;
  if (negative) scaled_num = -scaled_num;
  std::string digits = scaled_num.get_str();
  if (places > 0) {
    if (digits.size() <= places)
      digits.insert(0, places + 1 - digits.size(), '0');
    digits.insert(digits.size() - places, ".");
  }
  return negative ? "-" + digits : digits;
}

RationalVector parse_rational_list(std::string_view text) {
  RationalVector out;
  std::string token;
  bool in_comment = false;
  auto flush = [&] {
    std::string_view t = trim(token);
    if (!t.empty()) out.push_back(parse_rational(t));
    token.clear();
  };
  for (char c : text) {
    if (in_comment) {
      if (c == '\n') in_comment = false;
      continue;
    }
    if (c == '#') {
      flush();
      in_comment = true;
    } else if (c == ',' || c == ';' || c == '\n' || c == '\r' || c == '\t' ||
               c == ' ' || c == '(' || c == ')' || c == '[' || c == ']') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return out;
}

std::string format_vector(std::span<const Rational> v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << format_rational(v[i]);
  }
  os << ")";
  return os.str();
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

int sign(const Rational& q) { return sgn(q); }

RationalVector abs(std::span<const Rational> v) {
  RationalVector out;
  out.reserve(v.size());
  for (const Rational& q : v) out.push_back(abs(q));
  return out;
}

Rational sum(std::span<const Rational> v) {
  Rational s = 0;
  for (const Rational& q : v) s += q;
  return s;
}

Rational from_double(double d) {
  if (!std::isfinite(d)) fail(ErrorCode::kInvalidArgument, "non-finite value");
  return Rational(d);
}

std::vector<double> to_doubles(std::span<const Rational> v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const Rational& q : v) out.push_back(q.get_d());
  return out;
}

}  // namespace coxtour
