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

#include <algorithm>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "udcodes/decidability.hpp"
#include "udcodes/errors.hpp"

namespace udcodes {
namespace {

const AlphabetSize kTwo(2);
const AlphabetSize kThree(3);
const AlphabetSize kFour(4);

ExactRatio R(long p, long q) { return make_ratio(p, q); }

// Decides via the frontier search, not the dangling-set decider.
bool oracle_is_code(unsigned n, const std::vector<std::string>& raw) {
  const auto code = testing::to_sequence(n, raw);
  return !naive_double_factorization(code, default_witness_bound(code)).has_value();
}

struct Counts {
  long ud = 0;
  long pr = 0;
};

Counts brute_force_triple(unsigned n, unsigned a, unsigned b, unsigned c) {
  Counts out;
  for (const auto& x : testing::all_strings(n, a)) {
    for (const auto& y : testing::all_strings(n, b)) {
      for (const auto& z : testing::all_strings(n, c)) {
        out.pr += testing::strings_form_prefix_code({x, y, z}) ? 1 : 0;
        out.ud += oracle_is_code(n, {x, y, z}) ? 1 : 0;
      }
    }
  }
  return out;
}

TEST(FibTest, BaseCasesAndValues) {
  EXPECT_EQ(fib(0), 0);
  EXPECT_EQ(fib(1), 1);
  EXPECT_EQ(fib(7), 13);
  EXPECT_EQ(fib(24), 46368);
  EXPECT_EQ(fib(34), 5702887);
  for (unsigned k = 0; k <= 300; ++k) EXPECT_EQ(fib(k), testing::gmp_fib(k)) << k;
}

TEST(FibTest, ShiftIdentity) {
  for (std::uint32_t c = 0; c <= 64; ++c) {
    EXPECT_EQ(2 * fib(c + 1) + 4 * fib(c + 2), 2 * fib(c + 4)) << c;
  }
}

TEST(AlphaTest, Values) {
  EXPECT_EQ(alpha(kTwo), R(1, 6));
  EXPECT_EQ(alpha(kThree), R(1, 3));
  EXPECT_EQ(alpha(kFour), R(1, 2));
  EXPECT_EQ(alpha(AlphabetSize(10)), R(4, 5));
}

TEST(UdCountPairTest, Values) {
  EXPECT_EQ(ud_count_pair(kTwo, 1, 2), 6);
  EXPECT_EQ(ud_count_pair(kTwo, 2, 2), 12);
  EXPECT_EQ(ud_count_pair(kTwo, 2, 3), 30);  // 2^5 - 2^1
  EXPECT_EQ(ud_count_pair(kThree, 2, 4), 720);
  EXPECT_THROW(ud_count_pair(kTwo, 0, 1), PreconditionError);
}

TEST(UdCountPairTest, MatchesCommutationCount) {
  for (unsigned n = 2; n <= 3; ++n) {
    for (unsigned a = 1; a <= 4; ++a) {
      for (unsigned b = 1; b <= 4; ++b) {
        long count = 0;
        for (const auto& w : testing::all_strings(n, a)) {
          for (const auto& v : testing::all_strings(n, b)) count += (w + v != v + w) ? 1 : 0;
        }
        EXPECT_EQ(ud_count_pair(AlphabetSize(n), a, b), count) << n << " " << a << "," << b;
      }
    }
  }
}

TEST(PrCountTripleTest, Values) {
  for (std::uint32_t c = 2; c <= 12; ++c) {
    EXPECT_EQ(pr_count_triple(kTwo, LengthDistribution({1, 2, c})), pow_nat(2, c));
  }
  EXPECT_EQ(pr_count_triple(kTwo, LengthDistribution({1, 2, 5})), 32);
  EXPECT_EQ(pr_count_triple(kThree, LengthDistribution({1, 1, 2})), 18);
  EXPECT_EQ(pr_count_triple(kTwo, LengthDistribution({2, 2, 2})), 24);
  EXPECT_EQ(brute_force_triple(3, 1, 1, 2).pr, 18);
  EXPECT_EQ(brute_force_triple(2, 2, 2, 2).pr, 24);
  EXPECT_THROW(pr_count_triple(kTwo, LengthDistribution({1, 2})), PreconditionError);
}

TEST(PrCountTripleTest, FormsAgreeAndIgnoreOrder) {
  for (std::uint32_t n = 2; n <= 5; ++n) {
    for (std::uint32_t a = 1; a <= 6; ++a) {
      for (std::uint32_t b = 1; b <= 6; ++b) {
        for (std::uint32_t c = 1; c <= 6; ++c) {
          const LengthDistribution L({a, b, c});
          const auto value = pr_count_triple(AlphabetSize(n), L);
          EXPECT_EQ(value, pr_count_triple_product(AlphabetSize(n), L));
          EXPECT_EQ(value, pr_count_triple(AlphabetSize(n), L.sorted()));
          EXPECT_GE(value, 0);
        }
      }
    }
  }
}

TEST(PrCountTripleTest, MatchesStringEnumeration) {
  for (unsigned n = 2; n <= 3; ++n) {
    for (unsigned a = 1; a <= 3; ++a) {
      for (unsigned b = 1; b <= 3; ++b) {
        for (unsigned c = 1; c <= 3; ++c) {
          if (n == 3 && a + b + c > 7) continue;
          long count = 0;
          for (const auto& x : testing::all_strings(n, a)) {
            for (const auto& y : testing::all_strings(n, b)) {
              for (const auto& z : testing::all_strings(n, c)) {
                count += testing::strings_form_prefix_code({x, y, z}) ? 1 : 0;
              }
            }
          }
          EXPECT_EQ(pr_count_triple(AlphabetSize(n), LengthDistribution({a, b, c})), count);
        }
      }
    }
  }
}

TEST(UdCount11cTest, Values) {
  EXPECT_EQ(ud_count_11c(kThree, 2), 30);
  EXPECT_EQ(ud_count_11c(kFour, 3), 672);
  for (std::uint32_t c = 1; c <= 10; ++c) EXPECT_EQ(ud_count_11c(kTwo, c), 0);
  EXPECT_EQ(brute_force_triple(3, 1, 1, 2).ud, 30);
  EXPECT_EQ(brute_force_triple(4, 1, 1, 3).ud, 672);
  EXPECT_EQ(brute_force_triple(2, 1, 1, 3).ud, 0);
}

TEST(UdCount12cBinaryTest, Values) {
  EXPECT_EQ(ud_count_12c_binary(1), 0);
  EXPECT_EQ(ud_count_12c_binary(2), 8);
  EXPECT_EQ(ud_count_12c_binary(3), 20);
  EXPECT_EQ(brute_force_triple(2, 1, 2, 1).ud, 0);
  EXPECT_EQ(brute_force_triple(2, 1, 2, 2).ud, 8);
  EXPECT_EQ(brute_force_triple(2, 1, 2, 3).ud, 20);
  EXPECT_EQ(brute_force_triple(2, 1, 2, 5).ud, ud_count_12c_binary(5));
}

std::pair<long, long> non_codes_with(const std::string& x, const std::string& yz, unsigned c) {
  long non_codes = 0;
  long total = 0;
  for (const auto& w : testing::all_strings(2, c)) {
    ++total;
    non_codes += oracle_is_code(2, {x, yz, w}) ? 0 : 1;
  }
  return {non_codes, total};
}

TEST(JCountTest, OneZeroZero) {
  EXPECT_EQ(j_count_100(1), std::make_pair(ExactNat(1), ExactNat(2)));
  EXPECT_EQ(j_count_100(2), std::make_pair(ExactNat(2), ExactNat(2)));
  EXPECT_EQ(j_count_100(5), std::make_pair(ExactNat(8), ExactNat(9)));
  for (unsigned c = 1; c <= 8; ++c) {
    EXPECT_EQ(j_count_100(c).first, static_cast<long>(testing::block_words_1_00(c).size()));
    EXPECT_EQ(j_count_100(c).second, non_codes_with("1", "00", c).first) << c;
  }
}

TEST(JCountTest, OneZeroOne) {
  EXPECT_EQ(j_count_101(1), 2);
  EXPECT_EQ(j_count_101(2), 3);
  EXPECT_EQ(j_count_101(5), 13);
  for (unsigned c = 1; c <= 8; ++c) {
    long no_double_zero = 0;
    for (const auto& w : testing::all_strings(2, c)) {
      no_double_zero += w.find("00") == std::string::npos ? 1 : 0;
    }
    EXPECT_EQ(j_count_101(c), no_double_zero);
    EXPECT_EQ(j_count_101(c), non_codes_with("1", "01", c).first) << c;
  }
}

TEST(JCountTest, FibonacciRecurrences) {
  EXPECT_EQ(j_count_100(1).first, 1);
  EXPECT_EQ(j_count_100(2).first, 2);
  EXPECT_EQ(j_count_101(1), 2);
  EXPECT_EQ(j_count_101(2), 3);
  for (std::uint32_t c = 3; c <= 60; ++c) {
    EXPECT_EQ(j_count_100(c).first, j_count_100(c - 1).first + j_count_100(c - 2).first);
    EXPECT_EQ(j_count_101(c), j_count_101(c - 1) + j_count_101(c - 2));
  }
}

TEST(Thm1BoundTest, Values) {
  EXPECT_EQ(thm1_rho_upper_bound(kThree, LengthDistribution({1, 1, 2}), 1, 2), R(9, 10));
  EXPECT_EQ(thm1_rho_upper_bound(kTwo, LengthDistribution({1, 2, 5}), 1, 2), R(4, 5));
  EXPECT_EQ(thm1_rho_upper_bound(kTwo, LengthDistribution({1, 2}), 1, 2), R(4, 5));
  // Actual ratios sit below: 18/30 and 4/6.
  const auto counts = brute_force_triple(3, 1, 1, 2);
  EXPECT_LE(make_ratio(counts.pr, counts.ud), R(9, 10));
  EXPECT_EQ(make_ratio(counts.pr, counts.ud), R(3, 5));
  EXPECT_LE(make_ratio(4, ud_count_pair(kTwo, 1, 2)), R(4, 5));
}

TEST(Thm1BoundTest, Preconditions) {
  EXPECT_THROW(thm1_rho_upper_bound(kThree, LengthDistribution({1, 1, 2}), 1, 1),
               PreconditionError);
  EXPECT_THROW(thm1_rho_upper_bound(kThree, LengthDistribution({1, 1, 2}), 1, 3),
               PreconditionError);
  EXPECT_THROW(thm1_rho_upper_bound(kThree, LengthDistribution({2, 2, 2}), 2, 3),
               PreconditionError);
  EXPECT_THROW(thm1_rho_upper_bound(kTwo, LengthDistribution({1, 1, 2}), 1, 2),
               PreconditionError);
}

TEST(Thm2BoundTest, Values) {
  EXPECT_EQ(thm2_rho_lower_bound(kTwo, 3), R(1, 128));
  EXPECT_EQ(thm2_rho_lower_bound(kThree, 3), R(4, 81));
  EXPECT_EQ(thm2_rho_lower_bound(kFour, 2), R(1, 2));
  EXPECT_LE(thm2_rho_lower_bound(kFour, 2), R(3, 4));
  EXPECT_EQ(thm2_rho_lower_bound(kTwo, 1), 1);
  EXPECT_EQ(thm2_rho_lower_bound(kTwo, 2), R(1, 4));
  EXPECT_THROW(thm2_rho_lower_bound(kTwo, 0), PreconditionError);
}

TEST(QValueTest, Values) {
  EXPECT_EQ(q_value(kTwo, 1, 2), R(1, 6));
  EXPECT_EQ(q_value(kThree, 1, 1), R(1, 3));
  for (long n = 2; n <= 6; ++n) {
    EXPECT_EQ(q_value(AlphabetSize(static_cast<std::uint32_t>(n)), 1, 2),
              1 - make_ratio(2 * n + 1, n * n + n));
  }
  EXPECT_THROW(q_value(kTwo, 2, 1), PreconditionError);
}

TEST(QValueTest, IncreasesWithB) {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    for (std::uint32_t a = 1; a <= 6; ++a) {
      for (std::uint32_t b = a; b < a + 8; ++b) {
        EXPECT_LT(q_value(AlphabetSize(n), a, b), q_value(AlphabetSize(n), a, b + 1))
            << n << " " << a << " " << b;
      }
    }
  }
}

TEST(Rho11cClosedTest, Values) {
  EXPECT_EQ(rho_11c_closed(kThree, 1), 1);
  EXPECT_EQ(rho_11c_closed(kThree, 2), R(3, 5));
  EXPECT_EQ(rho_11c_closed(kFour, 2), R(2, 3));
  EXPECT_EQ(make_ratio(pr_count_triple(kFour, LengthDistribution({1, 1, 2})),
                       ud_count_11c(kFour, 2)),
            R(96, 144));
  for (std::uint32_t n = 3; n <= 7; ++n) {
    for (std::uint32_t c = 1; c <= 20; ++c) {
      EXPECT_EQ(rho_11c_closed(AlphabetSize(n), c),
                make_ratio(pr_count_triple(AlphabetSize(n), LengthDistribution({1, 1, c})),
                           ud_count_11c(AlphabetSize(n), c)));
    }
  }
  EXPECT_THROW(rho_11c_closed(kTwo, 3), PreconditionError);
}

}  // namespace
}  // namespace udcodes
