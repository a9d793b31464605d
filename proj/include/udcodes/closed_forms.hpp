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

#ifndef UDCODES_CLOSED_FORMS_HPP_
#define UDCODES_CLOSED_FORMS_HPP_

// Closed-form counts of codes and prefix codes, the bounds on the ratio
// rho = |PR_n(L)| / |UD_n(L)|, and the Fibonacci-type sequences that count
// the binary (1,2,c) family.

#include <cstdint>
#include <utility>

#include "udcodes/exact.hpp"
#include "udcodes/words.hpp"

namespace udcodes {

// F_0 = 0, F_1 = 1, by integer recurrence.
ExactNat fib(std::uint32_t k);

// Sharp lower threshold for rho over three-element distributions:
// 1/6 for n = 2, (n-2)/n otherwise.
ExactRatio alpha(AlphabetSize n);

// |UD_n((a,b))| = n^{a+b} - n^{gcd(a,b)}.
ExactNat ud_count_pair(AlphabetSize n, std::uint32_t a, std::uint32_t b);

// |PR_n(L)| for |L| = 3, with L sorted to a <= b <= c first:
// n^c (n^{a+b} - 2 n^b - n^a + n^{b-a} + 1). Cross-checked internally
// against the product form; returns 0 wherever the formula does, without
// checking the Kraft inequality. Throws PreconditionError unless |L| = 3.
ExactNat pr_count_triple(AlphabetSize n, const LengthDistribution& lengths);
// n^a (n^b - n^{b-a}) (n^c - n^{c-a} - n^{c-b}), same ordering.
ExactNat pr_count_triple_product(AlphabetSize n, const LengthDistribution& lengths);

// |UD_n((1,1,c))| = n (n-1) (n^c - 2^c).
ExactNat ud_count_11c(AlphabetSize n, std::uint32_t c);

// |UD_2((1,2,c))| = 3 * 2^{c+1} - 2 F_{c+4} - 2 (c mod 2). Binary only.
ExactNat ud_count_12c_binary(std::uint32_t c);

// (|J_{1,00}(c)|, |J_{1,00}(c) u {0^c}|) = (F_{c+1}, F_{c+1} + c mod 2).
// The second component is the number of w in {0,1}^c for which (1,00,w) is
// not a code.
std::pair<ExactNat, ExactNat> j_count_100(std::uint32_t c);

// |J_{1,01}(c)| = F_{c+2}: words of length c without "00", equivalently the
// w for which (1,01,w) is not a code.
ExactNat j_count_101(std::uint32_t c);

// Upper bound on rho implied by
//   1/rho >= 1 + r_a r_b / (n^{a+b} - n^{max(a,b)})
// for two distinct values a, b of a non-constant, realizable L.
// Throws PreconditionError otherwise.
ExactRatio thm1_rho_upper_bound(AlphabetSize n, const LengthDistribution& lengths,
                                std::uint32_t a, std::uint32_t b);

// Lower bound on rho for any realizable L with m entries:
//   q_{n,m} ((n - m mod (n-1)) / n^{floor(m/(n-1)) + 1})^{m-1},
// q_{n,m} = 1 if n >= m, else (m-1)! / (m-1)^{m-1}.
ExactRatio thm2_rho_lower_bound(AlphabetSize n, std::uint32_t m);

// Q(a,b) = (n^{a+b} - 2n^b - n^a + n^{b-a} + 1) / (n^{a+b} - n), b >= a >= 1.
ExactRatio q_value(AlphabetSize n, std::uint32_t a, std::uint32_t b);

// rho_{n,(1,1,c)} = (n-2) n^{c-1} / (n^c - 2^c); requires n > 2.
ExactRatio rho_11c_closed(AlphabetSize n, std::uint32_t c);

}  // namespace udcodes

#endif  // UDCODES_CLOSED_FORMS_HPP_
