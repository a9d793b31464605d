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

#include "udcodes/closed_forms.hpp"

#include <numeric>
#include <stdexcept>

#include "udcodes/decidability.hpp"
#include "udcodes/errors.hpp"

namespace udcodes {

namespace {

ExactNat npow(AlphabetSize n, std::uint64_t e) { return pow_nat(n.value(), e); }

void require_triple(const LengthDistribution& lengths) {
  if (lengths.size() != 3) {
    throw PreconditionError("expected a three-element length distribution, got (" +
                            lengths.to_string() + ")");
  }
}

}  // namespace

ExactNat fib(std::uint32_t k) {
  ExactNat prev = 0;
  ExactNat cur = 1;
  if (k == 0) return prev;
  for (std::uint32_t i = 1; i < k; ++i) {
    ExactNat next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ExactRatio alpha(AlphabetSize n) {
  if (n.value() == 2) return make_ratio(1, 6);
  return make_ratio(n.value() - 2, n.value());
}

ExactNat ud_count_pair(AlphabetSize n, std::uint32_t a, std::uint32_t b) {
  if (a == 0 || b == 0) throw PreconditionError("lengths must be positive");
  return npow(n, std::uint64_t{a} + b) - npow(n, std::gcd(a, b));
}

ExactNat pr_count_triple_product(AlphabetSize n, const LengthDistribution& lengths) {
  require_triple(lengths);
  const auto s = lengths.sorted();
  const std::uint32_t a = s[0], b = s[1], c = s[2];
  ExactNat value = npow(n, a) * (npow(n, b) - npow(n, b - a)) *
                   (npow(n, c) - npow(n, c - a) - npow(n, c - b));
  return value;
}

ExactNat pr_count_triple(AlphabetSize n, const LengthDistribution& lengths) {
  require_triple(lengths);
  const auto s = lengths.sorted();
  const std::uint32_t a = s[0], b = s[1], c = s[2];
  ExactNat inner = npow(n, std::uint64_t{a} + b) - 2 * npow(n, b) - npow(n, a) +
                   npow(n, b - a) + 1;
  ExactNat value = npow(n, c) * inner;
  if (value != pr_count_triple_product(n, lengths)) {
    throw std::logic_error("prefix-code count: expanded and product forms disagree");
  }
  return value;
}

ExactNat ud_count_11c(AlphabetSize n, std::uint32_t c) {
  if (c == 0) throw PreconditionError("c must be positive");
  return ExactNat(n.value()) * (n.value() - 1) * (npow(n, c) - pow_nat(2, c));
}

ExactNat ud_count_12c_binary(std::uint32_t c) {
  if (c == 0) throw PreconditionError("c must be positive");
  return 3 * pow_nat(2, std::uint64_t{c} + 1) - 2 * fib(c + 4) - 2 * ExactNat(c % 2);
}

std::pair<ExactNat, ExactNat> j_count_100(std::uint32_t c) {
  if (c == 0) throw PreconditionError("c must be positive");
  ExactNat j = fib(c + 1);
  ExactNat with_zeros = j + (c % 2);
  return {std::move(j), std::move(with_zeros)};
}

ExactNat j_count_101(std::uint32_t c) {
  if (c == 0) throw PreconditionError("c must be positive");
  return fib(c + 2);
}

ExactRatio thm1_rho_upper_bound(AlphabetSize n, const LengthDistribution& lengths,
                                std::uint32_t a, std::uint32_t b) {
  if (a == b) throw PreconditionError("the upper bound needs two different values");
  if (lengths.is_constant()) throw PreconditionError("the upper bound needs non-constant L");
  const auto ra = lengths.multiplicity(a);
  const auto rb = lengths.multiplicity(b);
  if (ra == 0 || rb == 0) {
    throw PreconditionError("values must occur in L = (" + lengths.to_string() + ")");
  }
  if (!is_realizable(n, lengths)) {
    throw PreconditionError("L = (" + lengths.to_string() + ") violates the Kraft inequality");
  }
  const ExactNat denom = npow(n, std::uint64_t{a} + b) - npow(n, std::max(a, b));
  const ExactRatio inverse = 1 + make_ratio(ExactNat(ra) * rb, denom);
  ExactRatio bound = 1 / inverse;
  bound.canonicalize();
  return bound;
}

ExactRatio thm2_rho_lower_bound(AlphabetSize n, std::uint32_t m) {
  if (m == 0) throw PreconditionError("m must be positive");
  const std::uint32_t k = n.value() - 1;
  ExactRatio q = 1;
  if (n.value() < m) {
    ExactNat factorial;
    mpz_fac_ui(factorial.get_mpz_t(), m - 1);
    q = make_ratio(factorial, pow_nat(m - 1, m - 1));
  }
  const ExactRatio base = make_ratio(n.value() - (m % k), npow(n, m / k + 1));
  ExactRatio power = 1;
  for (std::uint32_t i = 1; i < m; ++i) power *= base;
  ExactRatio out = q * power;
  out.canonicalize();
  return out;
}

ExactRatio q_value(AlphabetSize n, std::uint32_t a, std::uint32_t b) {
  if (a == 0 || b < a) throw PreconditionError("q_value requires b >= a >= 1");
  const ExactNat num = npow(n, std::uint64_t{a} + b) - 2 * npow(n, b) - npow(n, a) +
                       npow(n, b - a) + 1;
  const ExactNat den = npow(n, std::uint64_t{a} + b) - n.value();
  return make_ratio(num, den);
}

ExactRatio rho_11c_closed(AlphabetSize n, std::uint32_t c) {
  if (n.value() == 2) {
    throw PreconditionError("(1,1,c) has no binary codes; rho is undefined");
  }
  if (c == 0) throw PreconditionError("c must be positive");
  return make_ratio(ExactNat(n.value() - 2) * npow(n, c - 1), npow(n, c) - pow_nat(2, c));
}

}  // namespace udcodes
