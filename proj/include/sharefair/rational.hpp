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

#ifndef SHAREFAIR_RATIONAL_HPP_
#define SHAREFAIR_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace sharefair {

// Exact arbitrary-precision rational. Always kept canonical.
using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "7", "-3", "7/2" or a finite decimal "0.35" into an exact rational.
// Throws ParseError on anything else (including a zero denominator).
Rational parse_rational(std::string_view text);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// "p/q", or "p" when the denominator is 1.
std::string to_fraction_string(const Rational& value);

// Exact decimal when the denominator has no prime factor other than 2 and 5,
// with at least `min_fraction_digits` digits after the point; otherwise the
// fraction string. 3/5 -> "0.6", 1 -> "1.0", 7/50 -> "0.14", 1/3 -> "1/3".
std::string to_decimal_string(const Rational& value, int min_fraction_digits = 1);

// Decimal rounded half-away-from-zero to `digits` places; for human output.
std::string to_rounded_string(const Rational& value, int digits);

bool is_integer(const Rational& value);

BigInt lcm(const BigInt& a, const BigInt& b);

// True when the value fits in a signed 64-bit integer.
bool fits_int64(const BigInt& value);
std::int64_t to_int64(const BigInt& value);

}  // namespace sharefair

#endif  // SHAREFAIR_RATIONAL_HPP_
