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

#include "udcodes/exact.hpp"

#include <string>

#include "udcodes/errors.hpp"

namespace udcodes {

ExactNat pow_nat(std::uint64_t base, std::uint64_t exponent) {
  ExactNat out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

ExactRatio make_ratio(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  ExactRatio r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const ExactNat& n) { return n.get_str(); }

std::string to_string(const ExactRatio& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

ExactRatio parse_ratio(const std::string& text) {
  ExactRatio r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw ParseError("not a rational: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

ExactRatio abs(const ExactRatio& r) { return r < 0 ? ExactRatio(-r) : r; }

std::string to_decimal(const ExactRatio& r, int digits) {
  if (digits < 0) throw PreconditionError("negative digit count");
  const bool negative = r < 0;
  mpz_class num = r.get_num();
  if (negative) num = -num;
  const mpz_class& den = r.get_den();

  mpz_class scaled = num * pow_nat(10, static_cast<std::uint64_t>(digits));
  mpz_class quot;
  mpz_class rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(),
              den.get_mpz_t());
  const int cmp = ::cmp(mpz_class(2 * rem), den);
  if (cmp > 0 || (cmp == 0 && mpz_odd_p(quot.get_mpz_t()))) ++quot;

  std::string body = quot.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  const bool all_zero = quot == 0;
  return (negative && !all_zero ? "-" : "") + body;
}

}  // namespace udcodes
