// Copyright 2026 The udcodes Authors
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

#ifndef UDCODES_EXACT_HPP_
#define UDCODES_EXACT_HPP_

// Exact integer and rational arithmetic. Counts and ratios never pass
// through floating point; decimal strings are produced only for display.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace udcodes {

// Arbitrary-precision natural number. Non-negativity is a contract of the
// functions that return it, not of the type.
using ExactNat = mpz_class;

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator.
using ExactRatio = mpq_class;

inline ExactNat to_nat(std::uint64_t v) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return ExactNat(static_cast<unsigned long>(v));
}

ExactNat pow_nat(std::uint64_t base, std::uint64_t exponent);

ExactRatio make_ratio(const mpz_class& num, const mpz_class& den);

// "p/q" (or "p" when q == 1).
std::string to_string(const ExactRatio& r);
std::string to_string(const ExactNat& n);

// Parses "p/q" or "p"; throws ParseError.
ExactRatio parse_ratio(const std::string& text);

// Fixed-point rendering with `digits` fractional digits, rounded half to
// even.
std::string to_decimal(const ExactRatio& r, int digits = 12);

ExactRatio abs(const ExactRatio& r);

}  // namespace udcodes

#endif  // UDCODES_EXACT_HPP_
