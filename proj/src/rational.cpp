// Copyright 2026 The ShareFair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sharefair/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "sharefair/error.hpp"

namespace sharefair {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw ParseError("not a rational number: \"" + std::string(whole) + "\"");
  }
  BigInt value(std::string(s), 10);
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError("bad denominator in \"" + std::string(text) + "\"");
    BigInt den(std::string(den_text), 10);
    if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) int_part.remove_prefix(1);
    if ((!int_part.empty() && !all_digits(int_part)) || !all_digits(frac_part)) {
      throw ParseError("not a rational number: \"" + std::string(text) + "\"");
    }
    BigInt scale = 1;
    for (std::size_t d = 0; d < frac_part.size(); ++d) scale *= 10;
    BigInt whole = int_part.empty() ? BigInt(0) : BigInt(std::string(int_part), 10);
    BigInt frac(std::string(frac_part), 10);
    Rational r(whole * scale + frac, scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }

  return Rational(parse_integer(text, text));
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw PreconditionError("zero denominator");
  Rational r(BigInt(std::to_string(num), 10), BigInt(std::to_string(den), 10));
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal_string(const Rational& value, int min_fraction_digits) {
  BigInt den = value.get_den();
  int twos = 0;
  int fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2) != 0) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5) != 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return to_fraction_string(value);

  int digits = std::max({twos, fives, min_fraction_digits});
  BigInt scale = 1;
  for (int d = 0; d < digits; ++d) scale *= 10;
  BigInt scaled = value.get_num() * scale / value.get_den();
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
  std::string out = s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  return negative ? "-" + out : out;
}

std::string to_rounded_string(const Rational& value, int digits) {
  BigInt scale = 1;
  for (int d = 0; d < digits; ++d) scale *= 10;
  Rational scaled = abs(value) * scale + Rational(1, 2);
  BigInt rounded = scaled.get_num() / scaled.get_den();
  std::string s = rounded.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
  std::string out = s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  return (value < 0 && rounded != 0) ? "-" + out : out;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

bool fits_int64(const BigInt& value) {
  static const BigInt kMax(std::to_string(std::numeric_limits<std::int64_t>::max()), 10);
  static const BigInt kMin(std::to_string(std::numeric_limits<std::int64_t>::min()), 10);
  return value >= kMin && value <= kMax;
}

std::int64_t to_int64(const BigInt& value) {
  if (!fits_int64(value)) throw PreconditionError("integer does not fit in 64 bits");
  return std::stoll(value.get_str());
}

}  // namespace sharefair
