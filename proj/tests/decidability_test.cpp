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

#include "udcodes/decidability.hpp"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "udcodes/errors.hpp"

namespace udcodes {
namespace {

const AlphabetSize kTwo(2);

CodeSequence C(const char* text, std::uint32_t n = 2) {
  return CodeSequence::parse(AlphabetSize(n), text);
}

std::vector<std::string> strings(const DanglingSet& set) {
  std::vector<std::string> out;
  for (const auto& w : set) out.push_back(w.to_string());
  return out;
}

TEST(SardinasPattersonTest, OneZeroZeroOddTailTrace) {
  for (std::uint32_t c : {3u, 5u, 7u, 9u}) {
    const auto code = C(("1,00,1" + std::string(c, '0')).c_str());
    const auto v = sardinas_patterson(code);
    ASSERT_TRUE(v.is_code) << c;
    EXPECT_EQ(v.termination, Termination::kRepeatedDanglingSet);
    EXPECT_EQ(strings(v.trace[0]), (std::vector<std::string>{"1", "00", code[2].to_string()}));
    const std::uint32_t last = (c + 1) / 2;
    for (std::uint32_t i = 1; i <= last; ++i) {
      EXPECT_EQ(strings(v.trace[i]), std::vector<std::string>{std::string(c - 2 * i + 2, '0')})
          << "c=" << c << " i=" << i;
    }
    // {0} repeats once more and the run stops.
    ASSERT_EQ(v.trace.size(), last + 2);
    EXPECT_EQ(strings(v.trace.back()), std::vector<std::string>{"0"});
  }
}

TEST(SardinasPattersonTest, NotACodeExamples) {
  auto v = sardinas_patterson(C("1,00,100"));
  EXPECT_FALSE(v.is_code);
  EXPECT_EQ(v.termination, Termination::kIntersectionWithD0);

  v = sardinas_patterson(C("0,0"));
  EXPECT_FALSE(v.is_code);
  EXPECT_EQ(v.termination, Termination::kDuplicateCodewords);
  ASSERT_EQ(v.trace.size(), 1u);
  EXPECT_EQ(strings(v.trace[0]), std::vector<std::string>{"0"});
}

TEST(SardinasPattersonTest, PrefixCodeStopsOnEmptySet) {
  const auto v = sardinas_patterson(C("0,10,11"));
  EXPECT_TRUE(v.is_code);
  EXPECT_EQ(v.termination, Termination::kEmptyDanglingSet);
  EXPECT_EQ(v.trace.size(), 2u);
}

TEST(SardinasPattersonTest, TwoSingleLettersAndAnEscapingWord) {
  // (x, y, w) with x != y and w not over {x, y}: a code, for every such
  // choice over n = 3 and n = 4 with |w| <= 4.
  for (std::uint32_t n : {3u, 4u}) {
    const AlphabetSize alphabet(n);
    CodeChecker checker;
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        if (x == y) continue;
        for (std::uint32_t c = 1; c <= 4; ++c) {
          for (Word w : enumerate_words(alphabet, c)) {
            const auto d = w.digits();
            if (std::all_of(d.begin(), d.end(), [&](auto q) { return q == x || q == y; })) continue;
            std::vector<Word> code{Word::from_packed(alphabet, 1, x),
                                   Word::from_packed(alphabet, 1, y), w};
            const auto v = checker.decide(code);
            EXPECT_TRUE(v.is_code);
            for (std::size_t i = 1; i < v.trace.size(); ++i) {
              EXPECT_LE(v.trace[i].size(), 1u);
            }
          }
        }
      }
    }
  }
}

TEST(SardinasPattersonTest, TwoElementCharacterization) {
  CodeChecker checker;
  for (std::uint32_t a = 1; a <= 4; ++a) {
    for (std::uint32_t b = 1; b <= 4; ++b) {
      for (Word w : enumerate_words(kTwo, a)) {
        for (Word v : enumerate_words(kTwo, b)) {
          std::vector<Word> pair{w, v};
          EXPECT_EQ(checker.is_code(pair), w.concat(v) != v.concat(w))
              << w.to_string() << "," << v.to_string();
        }
      }
    }
  }
}

TEST(SardinasPattersonTest, TraceInvariants) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto code = testing::to_sequence(2, testing::random_code(rng, 2, 4, 5));
    const auto v = sardinas_patterson(code);
    ASSERT_FALSE(v.trace.empty());
    DanglingSet d0(code.words().begin(), code.words().end());
    std::sort(d0.begin(), d0.end());
    d0.erase(std::unique(d0.begin(), d0.end()), d0.end());
    EXPECT_EQ(v.trace[0], d0);
    bool met = false;
    for (std::size_t i = 1; i < v.trace.size(); ++i) {
      for (const auto& u : v.trace[i]) {
        EXPECT_FALSE(u.empty());
        const bool proper_suffix = std::any_of(code.words().begin(), code.words().end(), [&](const Word& c) {
          return u.length() < c.length() && c.drop_front(c.length() - u.length()) == u;
        });
        EXPECT_TRUE(proper_suffix);
        met = met || std::binary_search(d0.begin(), d0.end(), u);
      }
    }
    const bool clean_stop = v.termination == Termination::kEmptyDanglingSet ||
                            v.termination == Termination::kRepeatedDanglingSet;
    EXPECT_EQ(v.is_code, clean_stop && !met);
  }
}

TEST(SardinasPattersonTest, AgreesWithExhaustiveFactorizationSearch) {
  // If the DP oracle finds an ambiguous word, SP must reject; if SP
  // rejects, the naive oracle's witness must really have two
  // factorizations according to the DP counter.
  std::mt19937 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const auto raw = testing::random_code(rng, 2, 3, 3);
    const auto code = testing::to_sequence(2, raw);
    const bool sp = is_code(code);
    const auto ambiguous = testing::find_ambiguous_word(raw, 2, 9);
    if (!ambiguous.empty()) EXPECT_FALSE(sp) << code.to_string();
    if (!sp) {
      const auto witness = naive_double_factorization(code, default_witness_bound(code));
      ASSERT_TRUE(witness.has_value()) << code.to_string();
      EXPECT_GE(testing::count_factorizations(raw, witness->word.to_string()), 2);
      if (!ambiguous.empty()) EXPECT_EQ(witness->word.length(), ambiguous.size());
    }
  }
}

TEST(SardinasPattersonTest, VerdictIgnoresOrderOfEntries) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 1000; ++trial) {
    auto raw = testing::random_code(rng, 3, 4, 4);
    const bool expected = is_code(testing::to_sequence(3, raw));
    std::shuffle(raw.begin(), raw.end(), rng);
    EXPECT_EQ(is_code(testing::to_sequence(3, raw)), expected);
  }
}

TEST(SardinasPattersonTest, WorksOnWideWords) {
  std::string tail(70, '0');
  EXPECT_TRUE(is_code(C(("1,00,1" + tail.substr(1)).c_str())));  // 1 0^69, odd
  EXPECT_FALSE(is_code(C(("1,00,1" + tail).c_str())));            // 1 0^70, even
}

TEST(NaiveOracleTest, Examples) {
  const auto w = naive_double_factorization(C("1,00,100"), 3);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->word.to_string(), "100");
  EXPECT_EQ(w->factorization_a, (std::vector<std::size_t>{2}));
  EXPECT_EQ(w->factorization_b, (std::vector<std::size_t>{0, 1}));

  EXPECT_FALSE(naive_double_factorization(C("0,10,11"), 8).has_value());
  EXPECT_FALSE(naive_double_factorization(C("000"), 50).has_value());
  EXPECT_FALSE(naive_double_factorization(C("1,00,100"), 2).has_value());

  const auto dup = naive_double_factorization(C("01,1,01"), 5);
  ASSERT_TRUE(dup.has_value());
  EXPECT_EQ(dup->word.to_string(), "01");
  EXPECT_EQ(dup->factorization_a, (std::vector<std::size_t>{0}));
  EXPECT_EQ(dup->factorization_b, (std::vector<std::size_t>{2}));
}

TEST(NaiveOracleTest, Errors) {
  EXPECT_THROW(naive_double_factorization(C("0,1"), 0), PreconditionError);
  EXPECT_THROW(naive_double_factorization(C("0,01,011,0111,01111,11110"), 500, 2),
               SizeLimitError);
}

TEST(NaiveOracleTest, FindsLongWitnesses) {
  // (1, 00, 1 0^{2k}) is not a code; the shortest ambiguous word is the
  // third codeword itself.
  const auto w = naive_double_factorization(C("1,00,100000000"), 20);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->word.to_string(), "100000000");
  EXPECT_EQ(w->factorization_b.size(), 5u);
}

TEST(ReduceSequenceTest, Examples) {
  EXPECT_EQ(reduce_sequence(C("1,00,100"), 2, 0).to_string(), "1,00,00");
  EXPECT_EQ(reduce_sequence(C("1,00,1000"), 2, 0).to_string(), "1,00,000");
  EXPECT_FALSE(is_code(C("1,00,100")));
  EXPECT_FALSE(is_code(C("1,00,00")));
}

TEST(ReduceSequenceTest, Preconditions) {
  EXPECT_THROW(reduce_sequence(C("1,00,100"), 1, 0), PreconditionError);
  EXPECT_THROW(reduce_sequence(C("1,00,100"), 0, 0), PreconditionError);
  EXPECT_THROW(reduce_sequence(C("1,1"), 1, 0), PreconditionError);
  EXPECT_THROW(reduce_sequence(C("1,00,100"), 5, 0), PreconditionError);
}

TEST(KraftTest, Examples) {
  EXPECT_EQ(kraft_sum(kTwo, LengthDistribution({1, 2, 2})), 1);
  EXPECT_TRUE(is_realizable(kTwo, LengthDistribution({1, 2, 2})));
  for (std::uint32_t c = 1; c <= 20; ++c) {
    EXPECT_EQ(kraft_sum(kTwo, LengthDistribution({1, 1, c})), 1 + make_ratio(1, pow_nat(2, c)));
    EXPECT_FALSE(is_realizable(kTwo, LengthDistribution({1, 1, c})));
  }
  EXPECT_EQ(kraft_sum(AlphabetSize(3), LengthDistribution({1, 1, 2})), make_ratio(7, 9));
  EXPECT_TRUE(is_realizable(AlphabetSize(3), LengthDistribution({1, 1, 2})));
}

TEST(KraftTest, McMillanAgainstBruteForce) {
  // Kraft holds <=> some triple of these lengths is a code <=> some triple
  // is a prefix code.
  for (std::uint32_t n = 2; n <= 3; ++n) {
    for (std::uint32_t a = 1; a <= 3; ++a) {
      for (std::uint32_t b = 1; b <= 3; ++b) {
        for (std::uint32_t c = 1; c <= 3; ++c) {
          const LengthDistribution L({a, b, c});
          bool some_code = false;
          bool some_prefix_code = false;
          for (const auto& x : testing::all_strings(n, a)) {
            for (const auto& y : testing::all_strings(n, b)) {
              for (const auto& z : testing::all_strings(n, c)) {
                some_prefix_code = some_prefix_code || testing::strings_form_prefix_code({x, y, z});
                some_code = some_code || is_code(testing::to_sequence(n, {x, y, z}));
              }
            }
          }
          const bool kraft = is_realizable(AlphabetSize(n), L);
          EXPECT_EQ(kraft, some_code) << n << " " << L.to_string();
          EXPECT_EQ(kraft, some_prefix_code) << n << " " << L.to_string();
        }
      }
    }
  }
}

}  // namespace
}  // namespace udcodes
